#pragma once

// Nested descent graphs and the data they carry (NDes/NFix/NNeg), recovery of
// the involution from an inverse atom, the shape map onto noncrossing
// symmetric perfect matchings, NCSP enumeration, and the extremal atom
// constructors 0_A/1_A and 0_B/1_B.

#include <map>
#include <optional>
#include <sstream>

#include "atomkit/hecke.hpp"

namespace atomkit {

// ---------------------------------------------------------------------------
// Nested descent graph
// ---------------------------------------------------------------------------

struct NestedDescentGraph {
    struct Edge {
        int from = 0, to = 0;
        std::pair<int, int> label;  // the removed descent (b,a), b > a
    };
    std::vector<Word> vertices;  // sorted by (length desc, lex); source first
    std::vector<Edge> edges;     // sorted by (from, to)
    int source = 0;
    std::optional<int> sink;     // present iff the graph has a unique global sink
};

// Word-length cap for graph construction (the descendant closure grows fast).
inline int& nested_graph_bound() {
    static int bound = 9;
    return bound;
}

/// Children of a word: for every descent, the subword with that descent's two
/// letters removed, labeled by the removed pair.  Memoized: the same subwords
/// recur across the graphs of related atoms.
inline const std::vector<std::pair<std::pair<int, int>, Word>>& word_children(const Word& w) {
    thread_local std::map<Word, std::vector<std::pair<std::pair<int, int>, Word>>> cache;
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
    std::vector<std::pair<std::pair<int, int>, Word>> out;
    for (int p : descent_positions(w)) {
        Word child;
        child.reserve(w.size() - 2);
        for (int i = 0; i < static_cast<int>(w.size()); ++i)
            if (i != p && i != p + 1) child.push_back(w[i]);
        out.push_back({{w[p], w[p + 1]}, std::move(child)});
    }
    return cache.emplace(w, std::move(out)).first->second;
}

inline NestedDescentGraph nested_descent_graph(const Word& start) {
    if (static_cast<int>(start.size()) > nested_graph_bound())
        throw std::invalid_argument("nested descent graph bound exceeded (length " +
                                    std::to_string(start.size()) + " > " +
                                    std::to_string(nested_graph_bound()) + ")");
    {
        Word sorted = start;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("nested descent graph requires distinct letters");
    }
    // descendant closure
    std::map<Word, int> index;
    std::vector<Word> verts;
    std::vector<Word> frontier{start};
    index[start] = 0;
    verts.push_back(start);
    std::vector<std::tuple<Word, Word, std::pair<int, int>>> raw_edges;
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const auto& v : frontier)
            for (const auto& [label, child] : word_children(v)) {
                raw_edges.emplace_back(v, child, label);
                if (!index.count(child)) {
                    index[child] = 1;
                    verts.push_back(child);
                    next.push_back(child);
                }
            }
        frontier = std::move(next);
    }
    // canonical vertex order: longer words first, then lexicographic
    std::sort(verts.begin(), verts.end(), [](const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) index[verts[i]] = i;

    NestedDescentGraph g;
    g.vertices = std::move(verts);
    for (auto& [from, to, label] : raw_edges)
        g.edges.push_back({index[from], index[to], label});
    std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
        return std::tie(a.from, a.to, a.label) < std::tie(b.from, b.to, b.label);
    });
    g.source = index[start];

    std::vector<int> sinks;
    for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i)
        if (descent_positions(g.vertices[i]).empty()) sinks.push_back(i);
    if (sinks.size() == 1) g.sink = sinks.front();
    return g;
}

// ---------------------------------------------------------------------------
// Nested data
// ---------------------------------------------------------------------------

struct NestedData {
    std::vector<std::pair<int, int>> ndes;    // nested descents (b,a), sorted
    std::vector<std::pair<int, int>> ndes_b;  // ndes minus pairs (a,-b), 0 < a < b
    std::vector<int> nfix;                    // positive letters of the sink
    std::vector<int> nneg;                    // |negative letters| of the sink
    std::vector<int> nneg_b;                  // nneg plus a,b for removed pairs
    Word sink;
};

struct NotInverseAtom : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

/// Label sets along source->sink paths, checked for path independence.
/// Returns the label set at the source, or nullopt on any disagreement.
inline std::optional<std::vector<std::pair<int, int>>> path_labels(const NestedDescentGraph& g) {
    if (!g.sink) return std::nullopt;
    const int m = static_cast<int>(g.vertices.size());
    std::vector<std::optional<std::vector<std::pair<int, int>>>> labels(m);
    // vertices are sorted longest-first, so process in reverse (children first)
    for (int v = m - 1; v >= 0; --v) {
        if (descent_positions(g.vertices[v]).empty()) {
            if (v != *g.sink) return std::nullopt;  // second sink
            labels[v] = std::vector<std::pair<int, int>>{};
            continue;
        }
        std::optional<std::vector<std::pair<int, int>>> acc;
        for (const auto& e : g.edges) {
            if (e.from != v) continue;
            if (!labels[e.to]) return std::nullopt;
            auto s = *labels[e.to];
            s.push_back(e.label);
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end()) return std::nullopt;
            if (!acc)
                acc = std::move(s);
            else if (*acc != s)
                return std::nullopt;
        }
        labels[v] = std::move(acc);
    }
    return labels[g.source];
}

inline NestedData nested_data_unchecked(const NestedDescentGraph& g,
                                        std::vector<std::pair<int, int>> ndes) {
    NestedData d;
    d.ndes = std::move(ndes);
    d.sink = g.vertices[*g.sink];
    for (int x : d.sink)
        (x > 0 ? d.nfix : d.nneg).push_back(x > 0 ? x : -x);
    std::sort(d.nneg.begin(), d.nneg.end());
    d.nneg_b = d.nneg;
    for (auto [b, a] : d.ndes) {
        if (b > 0 && a < 0 && b < -a) {  // descent of shape (a, -b), 0 < a < b
            d.nneg_b.push_back(b);
            d.nneg_b.push_back(-a);
        } else {
            d.ndes_b.emplace_back(b, a);
        }
    }
    std::sort(d.nneg_b.begin(), d.nneg_b.end());
    return d;
}

}  // namespace detail

/// Nested data of w, defined when w is the inverse of an atom.  Detects
/// non-atoms structurally (missing/ambiguous sink, path-dependent labels) and
/// by final verification against the Hecke image.
inline NestedData nested_data(const SignedPermutation& w) {
    const auto g = nested_descent_graph(Word(w.window()));
    auto labels = detail::path_labels(g);
    if (!labels)
        throw NotInverseAtom("not an inverse atom (no unique sink or inconsistent labels): " +
                             format(w));
    auto d = detail::nested_data_unchecked(g, std::move(*labels));

    // assemble the candidate involution and verify w is one of its inverse atoms
    const int n = w.rank();
    std::vector<int> window(n, 0);
    auto place = [&](int i, int v) {
        if (i < 1 || i > n || window[i - 1] != 0) throw NotInverseAtom("not an inverse atom: " + format(w));
        window[i - 1] = v;
    };
    try {
        for (int e : d.nfix) place(e, e);
        for (int e : d.nneg_b) place(e, -e);
        for (auto [b, a] : d.ndes_b) {
            if (b < 1) throw NotInverseAtom("not an inverse atom: " + format(w));
            place(b, a);
            place(std::abs(a), a > 0 ? b : -b);
        }
        const SignedInvolution z{SignedPermutation(window)};
        if (hecke_image(w.inverse()) != z || coxeter_length(w) != involution_length(z))
            throw NotInverseAtom("not an inverse atom: " + format(w));
    } catch (const std::invalid_argument&) {
        throw NotInverseAtom("not an inverse atom: " + format(w));
    }
    return d;
}

/// The type-B refinement (NDes_B, NNeg_B) of the nested data.
inline std::pair<std::vector<std::pair<int, int>>, std::vector<int>> nested_data_b(
    const SignedPermutation& w) {
    auto d = nested_data(w);
    return {std::move(d.ndes_b), std::move(d.nneg_b)};
}

/// The unique z with w in A(z)^{-1}, reassembled from the nested data.
inline SignedInvolution recover_involution(const SignedPermutation& w) {
    const auto d = nested_data(w);
    const int n = w.rank();
    std::vector<int> window(n, 0);
    for (int e : d.nfix) window[e - 1] = e;
    for (int e : d.nneg_b) window[e - 1] = -e;
    for (auto [b, a] : d.ndes_b) {
        window[b - 1] = a;
        window[std::abs(a) - 1] = a > 0 ? b : -b;
    }
    return SignedInvolution(SignedPermutation(std::move(window)));
}

// ---------------------------------------------------------------------------
// Matchings
// ---------------------------------------------------------------------------

/// Symmetric matching on a finite vertex set closed under negation.  Blocks
/// are stored as (lo,hi) pairs sorted by lo; perfect/noncrossing are computed.
class Matching {
public:
    Matching() = default;

    Matching(std::vector<int> vertices, std::vector<std::pair<int, int>> blocks)
        : vertices_(std::move(vertices)), blocks_(std::move(blocks)) {
        std::sort(vertices_.begin(), vertices_.end());
        for (auto& [lo, hi] : blocks_) {
            if (lo > hi) std::swap(lo, hi);
            if (lo == hi) throw std::invalid_argument("matching block needs two distinct vertices");
        }
        std::sort(blocks_.begin(), blocks_.end());
        std::vector<int> used;
        for (auto [lo, hi] : blocks_) {
            used.push_back(lo);
            used.push_back(hi);
            for (int v : {lo, hi})
                if (!std::binary_search(vertices_.begin(), vertices_.end(), v))
                    throw std::invalid_argument("matching block outside vertex set");
        }
        std::sort(used.begin(), used.end());
        if (std::adjacent_find(used.begin(), used.end()) != used.end())
            throw std::invalid_argument("matching blocks are not disjoint");
        for (int v : vertices_)
            if (!std::binary_search(vertices_.begin(), vertices_.end(), -v))
                throw std::invalid_argument("vertex set not closed under negation");
        for (auto [lo, hi] : blocks_)
            if (!has_block(-hi, -lo))
                throw std::invalid_argument("matching is not symmetric under negation");
    }

    const std::vector<int>& vertex_set() const { return vertices_; }
    const std::vector<std::pair<int, int>>& blocks() const { return blocks_; }

    bool has_block(int a, int b) const {
        if (a > b) std::swap(a, b);
        return std::binary_search(blocks_.begin(), blocks_.end(), std::make_pair(a, b));
    }

    bool perfect() const { return 2 * blocks_.size() == vertices_.size(); }

    bool noncrossing() const {
        for (size_t p = 0; p < blocks_.size(); ++p)
            for (size_t q = p + 1; q < blocks_.size(); ++q) {
                auto [i, k] = blocks_[p];
                auto [j, l] = blocks_[q];
                if (i < j && j < k && k < l) return false;
            }
        return true;
    }

    int trivial_blocks() const {
        int c = 0;
        for (auto [lo, hi] : blocks_) c += lo + hi == 0;
        return c;
    }

    std::string str() const {
        std::string s = "{";
        for (size_t i = 0; i < blocks_.size(); ++i) {
            if (i) s += ',';
            s += '{' + std::to_string(blocks_[i].first) + ',' +
                 std::to_string(blocks_[i].second) + '}';
        }
        return s + "}";
    }

    friend bool operator==(const Matching&, const Matching&) = default;
    friend auto operator<=>(const Matching& a, const Matching& b) {
        if (auto c = a.vertices_ <=> b.vertices_; c != 0) return c;
        return a.blocks_ <=> b.blocks_;
    }

private:
    std::vector<int> vertices_;
    std::vector<std::pair<int, int>> blocks_;
};

/// Shape of an inverse atom: blocks {a,b},{-a,-b} for each nested descent
/// (a,-b) with 0 < a < b, and trivial blocks {e,-e} for e in NNeg(w).  Lives
/// on the negated points of the recovered involution.
inline Matching shape(const SignedPermutation& w) {
    const auto d = nested_data(w);
    std::vector<int> verts;
    std::vector<std::pair<int, int>> blocks;
    for (int e : d.nneg) {
        verts.push_back(e);
        verts.push_back(-e);
        blocks.emplace_back(-e, e);
    }
    for (auto [b, a] : d.ndes) {
        if (b > 0 && a < 0 && b < -a) {
            verts.insert(verts.end(), {b, -a, -b, a});
            blocks.emplace_back(b, -a);
            blocks.emplace_back(a, -b);
        }
    }
    return Matching(std::move(verts), std::move(blocks));
}

/// All noncrossing symmetric perfect matchings on Neg(z) u -Neg(z), built by
/// pairing the smallest unmatched vertex and closing under negation.  Sorted.
/// With max_trivial set, keeps only matchings with at most that many trivial
/// blocks (NCSP^k).
inline std::vector<Matching> ncsp(const SignedInvolution& z,
                                  std::optional<int> max_trivial = std::nullopt) {
    std::vector<int> verts;
    for (int i : z.neg()) {
        verts.push_back(-i);
        verts.push_back(i);
    }
    std::sort(verts.begin(), verts.end());

    std::vector<Matching> out;
    std::vector<std::pair<int, int>> blocks;
    auto crosses = [&](std::pair<int, int> nb) {
        for (auto [i, k] : blocks) {
            auto [j, l] = nb;
            if ((i < j && j < k && k < l) || (j < i && i < l && l < k)) return true;
        }
        return false;
    };
    auto rec = [&](auto&& self, std::vector<int> free) -> void {
        if (free.empty()) {
            out.emplace_back(verts, blocks);
            return;
        }
        const int a = free.front();
        for (size_t t = 1; t < free.size(); ++t) {
            const int b = free[t];
            const std::pair<int, int> blk{a, b};
            if (crosses(blk)) continue;
            if (a == -b) {  // trivial block, self-symmetric
                blocks.push_back(blk);
                std::vector<int> rest(free.begin() + 1, free.end());
                rest.erase(std::find(rest.begin(), rest.end(), b));
                self(self, std::move(rest));
                blocks.pop_back();
            } else {
                const std::pair<int, int> mirror{std::min(-a, -b), std::max(-a, -b)};
                if (std::find(free.begin(), free.end(), -b) == free.end()) continue;
                if (mirror == blk || crosses(mirror)) continue;
                // mirror cannot cross blk: check directly
                {
                    auto [i, k] = blk;
                    auto [j, l] = mirror;
                    if ((i < j && j < k && k < l) || (j < i && i < l && l < k)) continue;
                }
                blocks.push_back(blk);
                blocks.push_back(mirror);
                std::vector<int> rest;
                for (int v : free)
                    if (v != a && v != b && v != -a && v != -b) rest.push_back(v);
                self(self, std::move(rest));
                blocks.pop_back();
                blocks.pop_back();
            }
        }
    };
    rec(rec, verts);
    if (max_trivial)
        std::erase_if(out, [&](const Matching& m) { return m.trivial_blocks() > *max_trivial; });
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Extremal atoms
// ---------------------------------------------------------------------------

/// 0_A(z) and 1_A(z) for an involution of S_X: interleave the cycle pairs
/// (a,b), a <= b = z(a), as b1 a1 b2 a2 ... ordered by a (for 0_A) or by b
/// (for 1_A), then dedupe.
inline std::pair<SetPermutation, SetPermutation> zero_one_a(const SetPermutation& z) {
    if (!z.is_involution()) throw std::invalid_argument("zero_one_a: not an involution");
    std::vector<std::pair<int, int>> cyc;  // (a, b) with a <= b = z(a)
    for (int x : z.domain())
        if (x <= z.apply(x)) cyc.emplace_back(x, z.apply(x));
    auto build = [&](bool by_second) {
        auto order = cyc;
        if (by_second)
            std::sort(order.begin(), order.end(),
                      [](auto p, auto q) { return p.second < q.second; });
        else
            std::sort(order.begin(), order.end());
        Word interleaved;
        for (auto [a, b] : order) {
            interleaved.push_back(b);
            interleaved.push_back(a);
        }
        return SetPermutation(z.domain(), dedupe_first(interleaved));
    };
    return {build(false), build(true)};
}

namespace detail {

inline SignedPermutation interleave_cycles(std::vector<std::pair<int, int>> cyc, int n,
                                           bool by_second) {
    if (by_second)
        std::sort(cyc.begin(), cyc.end(), [](auto p, auto q) { return p.second < q.second; });
    else
        std::sort(cyc.begin(), cyc.end());
    Word interleaved;
    for (auto [a, b] : cyc) {
        interleaved.push_back(b);
        interleaved.push_back(a);
    }
    Word line = dedupe_first(interleaved);
    if (static_cast<int>(line.size()) != n)
        throw std::invalid_argument("cycle data does not define an element of W_n");
    return SignedPermutation(std::move(line));
}

inline std::vector<std::pair<int, int>> cyc_b_with_matching(const SignedInvolution& z,
                                                            const Matching& m) {
    std::vector<std::pair<int, int>> cyc = z.pairs();
    for (auto [lo, hi] : m.blocks()) {
        if (lo + hi == 0)
            cyc.emplace_back(lo, lo);  // (-a,-a) for the trivial block {a,-a}
        else if (lo > 0)
            cyc.emplace_back(-hi, lo);  // {a,b} with 0 < a < b gives (-b, a)
    }
    for (int a : z.fix()) cyc.emplace_back(a, a);
    return cyc;
}

}  // namespace detail

inline Matching matching_min(const SignedInvolution& z) {
    std::vector<int> verts;
    std::vector<std::pair<int, int>> blocks;
    for (int i : z.neg()) {
        verts.push_back(i);
        verts.push_back(-i);
        blocks.emplace_back(-i, i);
    }
    return Matching(std::move(verts), std::move(blocks));
}

/// Consecutive pairing of the sorted negated points and their negatives.
inline Matching matching_max(const SignedInvolution& z) {
    std::vector<int> verts;
    for (int i : z.neg()) {
        verts.push_back(i);
        verts.push_back(-i);
    }
    std::sort(verts.begin(), verts.end());
    std::vector<std::pair<int, int>> blocks;
    for (size_t i = 0; i + 1 < verts.size(); i += 2) blocks.emplace_back(verts[i], verts[i + 1]);
    return Matching(verts, std::move(blocks));
}

inline void require_ncsp_member(const SignedInvolution& z, const Matching& m) {
    std::vector<int> verts;
    for (int i : z.neg()) {
        verts.push_back(-i);
        verts.push_back(i);
    }
    std::sort(verts.begin(), verts.end());
    if (m.vertex_set() != verts || !m.perfect() || !m.noncrossing())
        throw std::invalid_argument("matching is not in NCSP(z)");
}

/// Minimal element of shape M in (A(z)^{-1}, <_A).
inline SignedPermutation zero_b(const SignedInvolution& z, const Matching& m) {
    require_ncsp_member(z, m);
    return detail::interleave_cycles(detail::cyc_b_with_matching(z, m), z.rank(), false);
}

/// Maximal element of shape M in (A(z)^{-1}, <_A).
inline SignedPermutation one_b(const SignedInvolution& z, const Matching& m) {
    require_ncsp_member(z, m);
    return detail::interleave_cycles(detail::cyc_b_with_matching(z, m), z.rank(), true);
}

/// 0_B(z) = 0_B(z, M_min), the minimum of the strong atomic order.
inline SignedPermutation zero_b(const SignedInvolution& z) {
    return detail::interleave_cycles(z.cyc_b(), z.rank(), false);
}

/// 1_B(z) = 1_B(z, M_max), the maximum of the very strong atomic order.
inline SignedPermutation one_b(const SignedInvolution& z) {
    return one_b(z, matching_max(z));
}

// ---------------------------------------------------------------------------
// Export
// ---------------------------------------------------------------------------

inline std::string word_str(const Word& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}

inline std::string to_dot(const NestedDescentGraph& g) {
    std::ostringstream os;
    os << "digraph nested_descents {\n";
    for (size_t i = 0; i < g.vertices.size(); ++i)
        os << "  v" << i << " [label=\"" << word_str(g.vertices[i]) << "\"];\n";
    for (const auto& e : g.edges)
        os << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.label.first << ","
           << e.label.second << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace atomkit
