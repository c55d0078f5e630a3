#pragma once

// Demazure product, Hecke images, validated signed involutions, and the
// exhaustive computation of atom and Hecke-atom sets.  The brute-force scans
// here are the oracles every faster construction is tested against.

#include <map>
#include <optional>
#include <utility>

#include "atomkit/core.hpp"

namespace atomkit {

// Rank cap for exhaustive scans over W_n (|W_6| = 46080 keeps runs cheap).
inline int& brute_force_bound() {
    static int bound = 6;
    return bound;
}

inline void set_brute_force_bound(int b) { brute_force_bound() = b; }

// ---------------------------------------------------------------------------
// SignedInvolution
// ---------------------------------------------------------------------------

/// Self-inverse signed permutation with its orbit data cached:
///   Neg(z)  = { i in [n] : z(i) = -i }
///   Fix(z)  = { i in [n] : z(i) = i }
///   Pair(z) = { (a,b) : |a| < z(a) = b, b in [n] }
class SignedInvolution {
public:
    SignedInvolution() = default;

    explicit SignedInvolution(SignedPermutation perm) : perm_(std::move(perm)) {
        if (!perm_.is_involution())
            throw std::invalid_argument("not an involution: " + format(perm_));
        const int n = perm_.rank();
        for (int i = 1; i <= n; ++i) {
            if (perm_(i) == -i) neg_.push_back(i);
            if (perm_(i) == i) fix_.push_back(i);
        }
        for (int a = -n; a <= n; ++a) {
            if (a == 0) continue;
            const int b = perm_(a);
            if (b >= 1 && std::abs(a) < b) pairs_.emplace_back(a, b);
        }
        std::sort(pairs_.begin(), pairs_.end());
    }

    const SignedPermutation& perm() const { return perm_; }
    int rank() const { return perm_.rank(); }
    const std::vector<int>& neg() const { return neg_; }
    const std::vector<int>& fix() const { return fix_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

    /// Pair(z) together with (-a,-a) for negated and (a,a) for fixed points,
    /// sorted by first coordinate.
    std::vector<std::pair<int, int>> cyc_b() const {
        std::vector<std::pair<int, int>> out = pairs_;
        for (int a : neg_) out.emplace_back(-a, -a);
        for (int a : fix_) out.emplace_back(a, a);
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const SignedInvolution& a, const SignedInvolution& b) {
        return a.perm_ == b.perm_;
    }
    friend auto operator<=>(const SignedInvolution& a, const SignedInvolution& b) {
        return a.perm_ <=> b.perm_;
    }

private:
    SignedPermutation perm_;
    std::vector<int> neg_, fix_;
    std::vector<std::pair<int, int>> pairs_;
};

// ---------------------------------------------------------------------------
// Demazure product
// ---------------------------------------------------------------------------

/// w o t_i: equals w t_i when that is longer, else w.
inline SignedPermutation demazure_step(const SignedPermutation& w, int i) {
    auto ds = right_descents(w);
    const bool descending = std::find(ds.begin(), ds.end(), i) != ds.end();
    return descending ? w : w.right_multiplied(i);
}

/// u o v, computed by folding a reduced word of v into u one generator at a
/// time.  Associative; restricts to the group product on length-additive pairs.
inline SignedPermutation demazure(const SignedPermutation& u, const SignedPermutation& v) {
    if (u.rank() != v.rank())
        throw std::invalid_argument("rank mismatch: " + std::to_string(u.rank()) + " vs " +
                                    std::to_string(v.rank()));
    SignedPermutation acc = u;
    for (int i : canonical_reduced_word(v)) acc = demazure_step(acc, i);
    return acc;
}

/// t_i o z o t_i via the three-case rule: z when the length drops, z t_i when
/// z and t_i commute, t_i z t_i otherwise.
inline SignedInvolution demazure_conjugate(int i, const SignedInvolution& z) {
    const SignedPermutation t = SignedPermutation::generator(z.rank(), i);
    const SignedPermutation zt = compose(z.perm(), t);
    if (coxeter_length(zt) < coxeter_length(z.perm())) return z;
    const SignedPermutation tz = compose(t, z.perm());
    return SignedInvolution(zt == tz ? zt : compose(t, zt));
}

/// w^{-1} o w, always an involution.
inline SignedInvolution hecke_image(const SignedPermutation& w) {
    SignedPermutation acc = w.inverse();
    for (int i : canonical_reduced_word(w)) acc = demazure_step(acc, i);
    return SignedInvolution(acc);
}

/// Common length of the atoms of z: (l(z) + l'(z)) / 2.
inline int involution_length(const SignedInvolution& z) {
    return (coxeter_length(z.perm()) + absolute_length(z.perm())) / 2;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration
// ---------------------------------------------------------------------------

/// All 2^n n! elements of W_n, sorted.
inline std::vector<SignedPermutation> all_elements(int n) {
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 1);
    std::vector<SignedPermutation> out;
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> w = base;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) w[i] = -w[i];
            out.emplace_back(std::move(w));
        }
    } while (std::next_permutation(base.begin(), base.end()));
    std::sort(out.begin(), out.end());
    return out;
}

/// All involutions of W_n, built by matching the smallest unpaired point with
/// every admissible partner.  Sorted.
inline std::vector<SignedInvolution> involutions(int n) {
    std::vector<SignedInvolution> out;
    std::vector<int> window(n, 0);
    auto rec = [&](auto&& self, int depth) -> void {
        int i = 0;
        while (i < n && window[i] != 0) ++i;
        if (i == n) {
            out.emplace_back(SignedPermutation(window));
            return;
        }
        window[i] = i + 1;  // fixed point
        self(self, depth + 1);
        window[i] = -(i + 1);  // negated point
        self(self, depth + 1);
        for (int j = i + 1; j < n; ++j) {
            if (window[j] != 0) continue;
            window[i] = j + 1;
            window[j] = i + 1;
            self(self, depth + 1);
            window[i] = -(j + 1);
            window[j] = -(i + 1);
            self(self, depth + 1);
            window[j] = 0;
        }
        window[i] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// All involutions of S_n (as SetPermutations on [n]), sorted.
inline std::vector<SetPermutation> involutions_sn(int n) {
    std::vector<SetPermutation> out;
    std::vector<int> line(n, 0);
    auto rec = [&](auto&& self) -> void {
        int i = 0;
        while (i < n && line[i] != 0) ++i;
        if (i == n) {
            out.emplace_back(SetPermutation::from_line(line));
            return;
        }
        line[i] = i + 1;
        self(self);
        for (int j = i + 1; j < n; ++j) {
            if (line[j] != 0) continue;
            line[i] = j + 1;
            line[j] = i + 1;
            self(self);
            line[j] = 0;
        }
        line[i] = 0;
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

inline void check_brute_rank(int n) {
    if (n > brute_force_bound())
        throw std::invalid_argument("rank " + std::to_string(n) +
                                    " beyond brute-force bound " +
                                    std::to_string(brute_force_bound()));
}

/// All w with w^{-1} o w = z, by scanning W_n.  Oracle for the fast paths.
inline std::vector<SignedPermutation> hecke_atoms_brute(const SignedInvolution& z) {
    check_brute_rank(z.rank());
    std::vector<SignedPermutation> out;
    for (const auto& w : all_elements(z.rank()))
        if (hecke_image(w) == z) out.push_back(w);
    return out;
}

/// The minimal-length Hecke atoms: w with w^{-1} o w = z and l(w) = lhat(z).
inline std::vector<SignedPermutation> atoms_brute(const SignedInvolution& z) {
    check_brute_rank(z.rank());
    const int lhat = involution_length(z);
    std::vector<SignedPermutation> out;
    for (const auto& w : all_elements(z.rank()))
        if (coxeter_length(w) == lhat && hecke_image(w) == z) out.push_back(w);
    return out;
}

inline std::vector<SignedPermutation> inverted(std::vector<SignedPermutation> ws) {
    for (auto& w : ws) w = w.inverse();
    std::sort(ws.begin(), ws.end());
    return ws;
}

/// Both A_hecke(w_0) and A(w_0) are closed under inversion for the longest
/// element w_0 = (-1,-2,...,-n).
inline bool symmetry_check_w0(int n) {
    std::vector<int> window(n);
    for (int i = 0; i < n; ++i) window[i] = -(i + 1);
    const SignedInvolution w0{SignedPermutation(window)};
    auto hecke = hecke_atoms_brute(w0);
    auto atoms = atoms_brute(w0);
    return inverted(hecke) == hecke && inverted(atoms) == atoms;
}

// ---------------------------------------------------------------------------
// S_X counterparts (used to cross-check the psi embedding)
// ---------------------------------------------------------------------------

inline SetPermutation demazure_step(const SetPermutation& w, int i) {
    return w.one_line()[i - 1] > w.one_line()[i] ? w : w.right_multiplied(i);
}

inline SetPermutation demazure(const SetPermutation& u, const SetPermutation& v) {
    if (u.domain() != v.domain()) throw std::invalid_argument("domain mismatch");
    SetPermutation acc = u;
    for (int i : canonical_reduced_word(v)) acc = demazure_step(acc, i);
    return acc;
}

inline SetPermutation hecke_image(const SetPermutation& w) {
    SetPermutation acc = w.inverse();
    for (int i : canonical_reduced_word(w)) acc = demazure_step(acc, i);
    return acc;
}

inline int involution_length(const SetPermutation& z) {
    return (coxeter_length(z) + absolute_length(z)) / 2;
}

inline std::vector<SetPermutation> hecke_atoms_brute(const SetPermutation& z) {
    if (!z.is_involution()) throw std::invalid_argument("not an involution");
    std::vector<SetPermutation> out;
    auto line = z.domain();
    do {
        SetPermutation w(z.domain(), line);
        if (hecke_image(w) == z) out.push_back(std::move(w));
    } while (std::next_permutation(line.begin(), line.end()));
    return out;
}

inline std::vector<SetPermutation> atoms_brute(const SetPermutation& z) {
    if (!z.is_involution()) throw std::invalid_argument("not an involution");
    const int lhat = involution_length(z);
    std::vector<SetPermutation> out;
    auto line = z.domain();
    do {
        SetPermutation w(z.domain(), line);
        if (coxeter_length(w) == lhat && hecke_image(w) == z) out.push_back(std::move(w));
    } while (std::next_permutation(line.begin(), line.end()));
    return out;
}

}  // namespace atomkit
