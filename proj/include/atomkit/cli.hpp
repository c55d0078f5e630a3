#pragma once

// Command-line surface.  Every verb is a pure function of its arguments with
// deterministic, canonically sorted output, so identical invocations are
// byte-identical.

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#include "atomkit/census.hpp"
#include "atomkit/equivalence.hpp"
#include "atomkit/tableaux.hpp"

namespace atomkit::cli {

using json = nlohmann::ordered_json;

namespace detail {

inline json window_json(const SignedPermutation& w) { return json(w.window()); }

inline json matching_json(const Matching& m) {
    json blocks = json::array();
    for (auto [lo, hi] : m.blocks()) blocks.push_back({lo, hi});
    return blocks;
}

inline void print_elements(std::ostream& out, const std::vector<SignedPermutation>& ws) {
    for (const auto& w : ws) out << format(w) << "\n";
}

inline int run_atoms(std::ostream& out, const std::string& ztext, bool want_inverse,
                     bool brute, bool hecke, const std::string& fmt) {
    const SignedInvolution z{parse_signed(ztext)};
    std::vector<SignedPermutation> elems;
    if (hecke)
        elems = inverted(hecke_atoms_brute(z));  // stored inverse-side
    else
        elems = brute ? inverted(atoms_brute(z)) : atoms_fast(z);
    if (want_inverse) elems = inverted(elems);
    if (fmt == "json") {
        json j;
        j["z"] = window_json(z.perm());
        j["inverse"] = !want_inverse;  // elements are A(z)^{-1} unless flipped
        json arr = json::array();
        for (const auto& w : elems) arr.push_back(window_json(w));
        j["elements"] = std::move(arr);
        out << j.dump() << "\n";
    } else {
        print_elements(out, elems);
    }
    return 0;
}

inline OrderKind order_from(const std::string& name) {
    if (name == "ltA") return OrderKind::ltA;
    if (name == "ltB") return OrderKind::ltB;
    if (name == "llB") return OrderKind::llB;
    if (name == "lllB") return OrderKind::lllB;
    throw std::invalid_argument("unknown order: " + name);
}

inline int run_hasse(std::ostream& out, const std::string& ztext, const std::string& order,
                     const std::string& fmt, bool paranoid) {
    const SignedInvolution z{parse_signed(ztext)};
    const auto h = hasse(z, order_from(order));
    if (paranoid && !hasse_graded(h, true))
        throw std::invalid_argument("gradedness cross-check failed");
    if (fmt == "dot") {
        out << to_dot(h);
    } else if (fmt == "json") {
        json j;
        j["order"] = order_name(h.order);
        json elems = json::array();
        for (const auto& w : h.elements) elems.push_back(window_json(w));
        j["elements"] = std::move(elems);
        json covers = json::array();
        for (const auto& c : h.covers) covers.push_back({c.lo, c.hi, cover_name(c.kind)});
        j["covers"] = std::move(covers);
        out << j.dump() << "\n";
    } else {
        out << "elements " << h.elements.size() << "\n";
        for (const auto& w : h.elements) out << format(w) << "\n";
        out << "covers " << h.covers.size() << "\n";
        for (const auto& c : h.covers)
            out << format(h.elements[c.lo]) << " -> " << format(h.elements[c.hi]) << " "
                << cover_name(c.kind) << "\n";
    }
    return 0;
}

inline int run_census(std::ostream& out, int n, bool check) {
    out << "n\tclass\tr\tk\tenumerated\tformula\tmatch\n";
    for (const auto& row : census(n, check)) {
        out << row.n << '\t' << row.klass << '\t';
        if (row.r >= 0) out << row.r;
        else out << '-';
        out << '\t';
        if (row.k >= 0) out << row.k;
        else out << '-';
        out << '\t';
        if (check) out << row.enumerated.get_str();
        else out << '-';
        out << '\t' << row.formula.get_str() << '\t';
        if (check) out << (row.match ? "true" : "false");
        else out << '-';
        out << '\n';
    }
    return 0;
}

inline int run_verify(std::ostream& out, int n) {
    bool ok = true;
    for (const auto& row : verify_identities(n)) {
        const char* tag = !row.asserted ? "INFO" : row.pass ? "PASS" : "FAIL";
        out << tag << ' ' << row.name << ": " << row.lhs_desc << " = " << row.lhs << " vs "
            << row.rhs_desc << " = " << row.rhs;
        if (!row.asserted) out << " (reported, not asserted)";
        out << "\n";
        if (row.asserted && !row.pass) ok = false;
    }
    return ok ? 0 : 1;
}

}  // namespace detail

/// Entry point used by both the binary and the tests.  Returns the process
/// exit code: 0 on success, 1 on domain errors, 2 on argument errors.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    if (const char* bound = std::getenv("ATOMKIT_BRUTE_BOUND"))
        set_brute_force_bound(std::atoi(bound));

    CLI::App app{"atoms of signed involutions: orders, shapes, census, reduced words"};
    app.require_subcommand(1);

    std::string ztext, wtext, order = "ltB", fmt = "text", suite = "identities";
    bool flag_inverse = false, flag_brute = false, flag_check = false, flag_paranoid = false;
    bool flag_count = false, flag_list = false, flag_lattice = false;
    int n = 0, max_trivial = -1;

    auto* atoms = app.add_subcommand("atoms", "inverse atoms A(z)^{-1} of an involution");
    atoms->add_option("-z", ztext, "involution window, e.g. \"-1,-2\"")->required();
    atoms->add_flag("--inverse", flag_inverse, "emit A(z) instead of A(z)^{-1}");
    atoms->add_flag("--brute", flag_brute, "use the exhaustive scan instead of closure");
    atoms->add_option("--format", fmt, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* hecke = app.add_subcommand("hecke-atoms", "inverse Hecke atoms of an involution");
    hecke->add_option("-z", ztext, "involution window")->required();
    hecke->add_flag("--inverse", flag_inverse, "emit A_hecke(z) instead of its inverse set");
    hecke->add_option("--format", fmt, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram of an atomic order");
    hasse_cmd->add_option("-z", ztext, "involution window")->required();
    hasse_cmd->add_option("--order", order, "ltA|ltB|llB|lllB")
        ->check(CLI::IsMember({"ltA", "ltB", "llB", "lllB"}));
    hasse_cmd->add_option("--format", fmt, "text|dot|json")
        ->check(CLI::IsMember({"text", "dot", "json"}));
    hasse_cmd->add_flag("--paranoid", flag_paranoid, "cross-check gradedness by chain lengths");

    auto* ncsp_cmd = app.add_subcommand("ncsp", "noncrossing symmetric perfect matchings");
    ncsp_cmd->add_option("-z", ztext, "involution window")->required();
    ncsp_cmd->add_option("--max-trivial", max_trivial, "keep at most this many trivial blocks");
    ncsp_cmd->add_option("--format", fmt, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* shape_cmd = app.add_subcommand("shape", "shape of an inverse atom");
    shape_cmd->add_option("-w", wtext, "inverse atom window")->required();

    auto* nested = app.add_subcommand("nested", "nested descent data of an inverse atom");
    nested->add_option("-w", wtext, "window")->required();
    nested->add_option("--format", fmt, "text|dot|json")
        ->check(CLI::IsMember({"text", "dot", "json"}));

    auto* census_cmd = app.add_subcommand("census", "atomic involution counts");
    census_cmd->add_option("-n", n, "rank")->required()->check(CLI::NonNegativeNumber);
    census_cmd->add_flag("--check", flag_check, "cross-check formulas by enumeration");

    auto* words = app.add_subcommand("words", "reduced words of a signed permutation");
    words->add_option("-w", wtext, "window")->required();
    words->add_flag("--count", flag_count, "print |R(w)| (default)");
    words->add_flag("--list", flag_list, "enumerate the words");

    auto* verify = app.add_subcommand("verify", "evaluate the enumerative identities");
    verify->add_option("--suite", suite, "identities")->check(CLI::IsMember({"identities"}));
    verify->add_option("-n", n, "size parameter")->required()->check(CLI::PositiveNumber);

    auto* probe = app.add_subcommand("probe", "order-theoretic probe of an atom poset");
    probe->add_option("-z", ztext, "involution window")->required();
    probe->add_option("--order", order, "ltA|ltB|llB|lllB")
        ->check(CLI::IsMember({"ltA", "ltB", "llB", "lllB"}));
    probe->add_flag("--lattice", flag_lattice, "print only the lattice verdict");
    probe->add_flag("--paranoid", flag_paranoid, "cross-check gradedness by chain lengths");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(atoms))
            return detail::run_atoms(out, ztext, flag_inverse, flag_brute, false, fmt);
        if (app.got_subcommand(hecke))
            return detail::run_atoms(out, ztext, flag_inverse, false, true, fmt);
        if (app.got_subcommand(hasse_cmd))
            return detail::run_hasse(out, ztext, order, fmt, flag_paranoid);
        if (app.got_subcommand(ncsp_cmd)) {
            const SignedInvolution z{parse_signed(ztext)};
            const auto ms =
                ncsp(z, max_trivial >= 0 ? std::optional<int>(max_trivial) : std::nullopt);
            if (fmt == "json") {
                json j;
                j["z"] = detail::window_json(z.perm());
                json arr = json::array();
                for (const auto& m : ms) arr.push_back(detail::matching_json(m));
                j["matchings"] = std::move(arr);
                out << j.dump() << "\n";
            } else {
                for (const auto& m : ms) out << m.str() << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(shape_cmd)) {
            out << shape(parse_signed(wtext)).str() << "\n";
            return 0;
        }
        if (app.got_subcommand(nested)) {
            const auto w = parse_signed(wtext);
            const auto d = nested_data(w);
            if (fmt == "dot") {
                out << to_dot(nested_descent_graph(Word(w.window())));
            } else if (fmt == "json") {
                json j;
                j["w"] = detail::window_json(w);
                json nd = json::array();
                for (auto [b, a] : d.ndes) nd.push_back({b, a});
                j["ndes"] = std::move(nd);
                j["nfix"] = d.nfix;
                j["nneg"] = d.nneg;
                j["sink"] = d.sink;
                j["z"] = detail::window_json(recover_involution(w).perm());
                const auto g = nested_descent_graph(Word(w.window()));
                json verts = json::array();
                for (const auto& v : g.vertices) verts.push_back(v);
                json edges = json::array();
                for (const auto& e : g.edges)
                    edges.push_back({e.from, e.to, {e.label.first, e.label.second}});
                j["graph"] = {{"vertices", std::move(verts)}, {"edges", std::move(edges)}};
                out << j.dump() << "\n";
            } else {
                out << "ndes:";
                for (auto [b, a] : d.ndes) out << " (" << b << "," << a << ")";
                out << "\nnfix:";
                for (int e : d.nfix) out << ' ' << e;
                out << "\nnneg:";
                for (int e : d.nneg) out << ' ' << e;
                out << "\nsink: " << word_str(d.sink) << "\n";
                out << "z: " << format(recover_involution(w).perm()) << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(census_cmd)) return detail::run_census(out, n, flag_check);
        if (app.got_subcommand(words)) {
            const auto w = parse_signed(wtext);
            if (flag_list) {
                for (const auto& word : reduced_words(w)) {
                    for (size_t i = 0; i < word.size(); ++i)
                        out << (i ? "," : "") << word[i];
                    out << "\n";
                }
                if (flag_count) out << count_reduced_words(w).get_str() << "\n";
            } else {
                out << count_reduced_words(w).get_str() << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(verify)) return detail::run_verify(out, n);
        if (app.got_subcommand(probe)) {
            const SignedInvolution z{parse_signed(ztext)};
            const auto r = poset_probe(z, detail::order_from(order), flag_paranoid);
            if (flag_lattice) {
                out << "lattice " << (r.lattice ? "true" : "false") << "\n";
            } else {
                out << "graded " << (r.graded ? "true" : "false") << "\n"
                    << "bounded " << (r.bounded ? "true" : "false") << "\n"
                    << "lattice " << (r.lattice ? "true" : "false") << "\n"
                    << "lower_semilattice " << (r.lower_semilattice ? "true" : "false") << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace atomkit::cli
