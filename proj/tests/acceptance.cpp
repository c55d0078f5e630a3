// Acceptance suite: one line per criterion, exit status reports overall pass.

#include <chrono>
#include <iostream>
#include <set>

#include "atomkit/atomkit.hpp"

using namespace atomkit;

namespace {

SignedPermutation sp(const std::string& s) { return parse_signed(s); }
SignedInvolution inv(const std::string& s) { return SignedInvolution(parse_signed(s)); }

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  " << number << ". " << name;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!pass) ++failures;
}

long catalan(int m) {
    long c = 1;
    for (int i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

// 1. atoms_fast(z) equals the brute-force oracle exactly for n <= 4.
bool oracle_equivalence() {
    for (int n = 1; n <= 4; ++n)
        for (const auto& z : involutions(n))
            if (atoms_fast(z) != inverted(atoms_brute(z))) return false;
    return true;
}

// 2. worked-example goldens: the rank-4 diagram, the rank-5 vertex set, the
//    two-component example.
bool worked_examples() {
    const auto h = hasse(inv("-1,-2,-3,-4"), OrderKind::ltB);
    if (h.elements.size() != 11) return false;
    std::vector<std::string> verts;
    for (const auto& e : h.elements) verts.push_back(format(e));
    const std::vector<std::string> expect_verts = {
        "-4,-3,-2,-1", "-4,-3,1,-2", "-4,-1,2,-3", "-4,2,-3,-1", "-2,-1,3,-4", "-2,3,-4,-1",
        "1,-4,2,-3",   "1,-2,3,-4",  "1,3,-4,-2",  "3,-4,-2,-1", "3,-4,1,-2"};
    if (verts != expect_verts) return false;

    using Edge = std::tuple<std::string, std::string, std::string>;
    std::vector<Edge> edges;
    for (const auto& c : h.covers)
        edges.emplace_back(format(h.elements[c.lo]), format(h.elements[c.hi]),
                           cover_name(c.kind));
    std::sort(edges.begin(), edges.end());
    const std::vector<Edge> expect_edges = {
        {"-2,-1,3,-4", "1,-2,3,-4", "B"},  {"-2,3,-4,-1", "-2,-1,3,-4", "A"},
        {"-4,-1,2,-3", "1,-4,2,-3", "B"},  {"-4,-3,-2,-1", "-4,2,-3,-1", "B"},
        {"-4,-3,-2,-1", "3,-4,-2,-1", "B"}, {"-4,-3,1,-2", "3,-4,1,-2", "B"},
        {"-4,2,-3,-1", "-4,-1,2,-3", "A"}, {"1,3,-4,-2", "1,-2,3,-4", "A"},
        {"3,-4,-2,-1", "-2,3,-4,-1", "A"}, {"3,-4,1,-2", "1,3,-4,-2", "A"}};
    if (edges != expect_edges) return false;

    const auto atoms5 = atoms_fast(inv("-1,-2,-3,-4,-5"));
    const std::vector<std::string> expect5 = {
        "-5,-4,-3,-2,-1", "-5,-4,-3,1,-2", "-5,-4,-1,2,-3", "-5,-4,2,-3,-1", "-5,-2,-1,3,-4",
        "-5,-2,3,-4,-1",  "-5,1,-4,2,-3",  "-5,1,-2,3,-4",  "-5,1,3,-4,-2",  "-5,3,-4,-2,-1",
        "-5,3,-4,1,-2",   "-3,-2,-1,4,-5", "-3,-2,4,-5,-1", "-3,1,-2,4,-5",  "-3,1,4,-5,-2",
        "-3,4,-5,-2,-1",  "-3,4,-5,1,-2",  "-1,2,-5,3,-4",  "-1,2,-3,4,-5",  "-1,2,4,-5,-3",
        "-1,4,-5,2,-3",   "2,-5,-1,3,-4",  "2,-5,3,-4,-1",  "2,-3,-1,4,-5",  "2,-3,4,-5,-1",
        "2,4,-5,-3,-1",   "4,-5,-3,-2,-1", "4,-5,-3,1,-2",  "4,-5,-1,2,-3",  "4,-5,2,-3,-1"};
    if (atoms5.size() != 30) return false;
    std::vector<std::string> got5;
    for (const auto& w : atoms5) got5.push_back(format(w));
    if (got5 != expect5) return false;

    const auto comps = components_a(inv("-1,-2,-4,-3"));
    size_t total = 0;
    for (const auto& c : comps) total += c.elements.size();
    return comps.size() == 2 && total == 6;
}

// 3. components of (A(z)^{-1}, <_A) biject with NCSP(z) through the shape of
//    their minimal elements, n <= 4.
bool shape_bijection() {
    for (int n = 1; n <= 4; ++n)
        for (const auto& z : involutions(n)) {
            const auto comps = components_a(z);
            const auto matchings = ncsp(z);
            const long m = static_cast<long>(z.neg().size());
            if (BigCount(comps.size()) != binomial(m, m / 2)) return false;
            if (comps.size() != matchings.size()) return false;
            const auto h = hasse(z, OrderKind::ltA);
            std::set<Matching> shapes;
            for (int i : minimal_indices(h)) shapes.insert(shape(h.elements[i]));
            if (shapes != std::set<Matching>(matchings.begin(), matchings.end())) return false;
            if (shapes.size() != minimal_indices(h).size()) return false;
        }
    return true;
}

// 4. the <_B-maximal set has Catalan size; exact sinks for the rank-5 example.
bool catalan_maxima() {
    for (int n = 1; n <= 5; ++n)
        for (const auto& z : involutions(n)) {
            const auto [mins, maxs] = extremes(z, OrderKind::ltB);
            const int m = static_cast<int>(z.neg().size());
            if (static_cast<long>(maxs.size()) != catalan((m + 1) / 2)) return false;
        }
    const auto [mins5, maxs5] = extremes(inv("-1,-2,-3,-4,-5"), OrderKind::ltB);
    std::vector<std::string> sinks;
    for (const auto& w : maxs5) sinks.push_back(format(w));
    return sinks == std::vector<std::string>{"-5,1,-4,2,-3", "-5,1,-2,3,-4", "-3,1,-2,4,-5",
                                             "-1,2,-5,3,-4", "-1,2,-3,4,-5"};
}

// 5. rank_A/rank_B grade every cover; zeros and maxima sit where stated.
bool gradedness() {
    for (int n = 1; n <= 4; ++n)
        for (const auto& z : involutions(n)) {
            const auto ha = hasse(z, OrderKind::ltA);
            std::map<SignedPermutation, int> ra, rb;
            for (const auto& w : ha.elements) {
                ra[w] = rank_a(w);
                rb[w] = rank_b(w);
            }
            for (const auto& c : ha.covers)
                if (ra.at(ha.elements[c.hi]) != ra.at(ha.elements[c.lo]) + 1) return false;
            const auto mins = minimal_indices(ha);
            for (int i = 0; i < static_cast<int>(ha.elements.size()); ++i) {
                const bool is_min = std::find(mins.begin(), mins.end(), i) != mins.end();
                if ((ra.at(ha.elements[i]) == 0) != is_min) return false;
            }
            const auto hv = hasse(z, OrderKind::lllB);
            for (const auto& c : hv.covers)
                if (rb.at(hv.elements[c.hi]) != rb.at(hv.elements[c.lo]) + 1) return false;
            const auto z0 = zero_b(z), z1 = one_b(z);
            for (const auto& w : ha.elements) {
                if ((rb.at(w) == 0) != (w == z0)) return false;
                if (w != z1 && rb.at(w) >= rb.at(z1)) return false;
            }
        }
    return true;
}

// 6. the approx_B classes partition W_n into inverse Hecke atom sets (n <= 4);
//    approx_A does the same inside S_n (n <= 5).
bool hecke_classes() {
    for (int n = 1; n <= 4; ++n) {
        std::set<SignedPermutation> done;
        for (const auto& w : all_elements(n)) {
            if (done.count(w)) continue;
            const auto cls = equivalence_class(w, MoveRuleset::approxB);
            const auto expect = inverted(hecke_atoms_brute(hecke_image(w.inverse())));
            if (cls != expect) return false;
            done.insert(cls.begin(), cls.end());
        }
    }
    for (int n = 2; n <= 5; ++n) {
        std::vector<int> line(n);
        std::iota(line.begin(), line.end(), 1);
        do {
            const SignedPermutation w{line};
            const auto cls = equivalence_class(w, MoveRuleset::approxA);
            // inverse Hecke atoms inside S_n: brute scan over positive windows
            const auto target = hecke_image(w.inverse());
            std::vector<SignedPermutation> expect;
            std::vector<int> l2(n);
            std::iota(l2.begin(), l2.end(), 1);
            do {
                const SignedPermutation v{l2};
                if (hecke_image(v.inverse()) == target) expect.push_back(v);
            } while (std::next_permutation(l2.begin(), l2.end()));
            if (cls != expect) return false;
        } while (std::next_permutation(line.begin(), line.end()));
    }
    return true;
}

// 7. the nine-point worked example reproduces its nested data exactly.
bool nested_goldens() {
    const auto w = sp("-1,6,7,-2,3,4,8,-9,5");
    const auto d = nested_data(w);
    if (d.ndes != std::vector<std::pair<int, int>>{{6, 3}, {7, -2}, {8, -9}}) return false;
    if (d.nneg != std::vector<int>{1} || d.nfix != std::vector<int>{4, 5}) return false;
    if (shape(w).str() != "{{-9,-8},{-1,1},{8,9}}") return false;
    return recover_involution(w) == inv("-1,-7,6,4,5,3,-2,-8,-9");
}

// 8. the census agrees with every closed form for n <= 8, reproduces the
//    pinned sequences, and the membership criterion matches |A(z)| = 1.
bool census_counts() {
    const std::vector<long> a0 = {1, 1, 3, 4, 11, 16, 42, 64};
    const std::vector<long> a = {1, 2, 5, 12, 26, 64, 130, 320};
    for (int n = 0; n <= 8; ++n) {
        BigCount seen_a0 = -1, seen_a = -1;
        for (const auto& row : census(n)) {
            if (!row.match) return false;
            if (row.klass == "a0") seen_a0 = row.enumerated;
            if (row.klass == "a") seen_a = row.enumerated;
        }
        if (n <= 7 && (seen_a0 != a0[n] || seen_a != a[n])) return false;
    }
    for (int n = 1; n <= 4; ++n)
        for (const auto& z : involutions(n))
            if (is_atomic(z) != (atoms_brute(z).size() == 1)) return false;
    return true;
}

// 9. reduced-word identities, each side computed independently.
bool enumerative_identities() {
    if (count_reduced_words(sp("3,2,1")) != 2) return false;
    if (count_reduced_words(sp("4,3,2,1")) != 16) return false;
    if (hook_f(Partition({3, 2, 1})) != 16) return false;
    if (rhat_count(inv("-1,-2")) != 2) return false;
    const std::vector<long> gamma = {1, 1, 2, 5, 42};
    for (int n = 1; n <= 5; ++n)
        if (BigCount(rhat_words(grassmannian_involution(n)).size()) != gamma[n - 1])
            return false;
    if (shifted_g(Partition({3, 1}, true)) != 2) return false;
    return shifted_g(Partition({5, 3, 1}, true)) == 42;
}

// 10. probe harness: bounded graded <_A components (n <= 4), the strong order
//     is a lower semilattice for n <= 5, and the very strong order probe runs
//     as a report only.
bool probes() {
    for (int n = 1; n <= 4; ++n)
        for (const auto& z : involutions(n))
            for (const auto& comp : components_a(z)) {
                const auto r = poset_probe(detail::hasse_of(comp.elements, OrderKind::ltA), true);
                if (!r.graded || !r.bounded) return false;
            }
    for (int n = 1; n <= 5; ++n)
        for (const auto& z : involutions(n)) {
            const auto r = poset_probe(z, OrderKind::llB);
            if (!r.graded || !r.lower_semilattice) return false;
        }
    int lattices = 0, posets = 0;
    for (const auto& z : involutions(4)) {
        ++posets;
        lattices += poset_probe(z, OrderKind::lllB).lattice;
    }
    std::cout << "      (report: " << lattices << "/" << posets
              << " very-strong-order posets at n = 4 are lattices; no assertion)\n";
    return true;
}

template <typename F>
void timed(int number, const std::string& name, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = f();
    } catch (const std::exception& e) {
        note = e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    report(number, name, ok, note.empty() ? std::to_string(ms) + " ms" : note);
}

}  // namespace

int main() {
    timed(1, "oracle equivalence: atoms_fast = atoms_brute^{-1} for n <= 4", oracle_equivalence);
    timed(2, "worked-example goldens (rank-4 diagram, rank-5 vertices, two components)",
          worked_examples);
    timed(3, "shape bijection: components <-> NCSP(z) for n <= 4", shape_bijection);
    timed(4, "Catalan maxima of the weak atomic order for n <= 5", catalan_maxima);
    timed(5, "gradedness of rank_A and rank_B with pinned extremes for n <= 4", gradedness);
    timed(6, "Hecke classes: approx_B on W_4 and approx_A on S_5", hecke_classes);
    timed(7, "nested-descent goldens for the nine-letter example", nested_goldens);
    timed(8, "census: closed forms vs enumeration for n <= 8", census_counts);
    timed(9, "enumerative identities for reduced words", enumerative_identities);
    timed(10, "poset probes: bounded graded components, lower semilattice for n <= 5", probes);

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
