#pragma once

// Classification and exact enumeration of atomic involutions (those with a
// single atom): the membership criterion, radius stratification, the eta,
// pi0 and pi1 bijections, dispersed Dyck paths, and the closed-form count
// table with enumeration cross-checks.

#include "atomkit/bigcount.hpp"
#include "atomkit/structure.hpp"

namespace atomkit {

// ---------------------------------------------------------------------------
// Atomic involutions
// ---------------------------------------------------------------------------

/// z is atomic iff it has at most one negated point and no two cycles
/// {a,d}, {b,c} in [-n,n] with -d != a < b <= c < d.  (Nesting inside a
/// symmetric cycle is allowed; inside any other 2-cycle it is not.)
inline bool is_atomic(const SignedInvolution& z) {
    if (z.neg().size() > 1) return false;
    const int n = z.rank();
    std::vector<std::pair<int, int>> cycles;  // (min, max) over [-n,n], fixed points included
    for (int i = -n; i <= n; ++i) {
        if (i == 0) continue;
        const int j = z.perm()(i);
        if (i <= j) cycles.emplace_back(i, j);
    }
    for (auto [a, d] : cycles) {
        if (a == d || a == -d) continue;  // only asymmetric 2-cycles can obstruct
        for (auto [b, c] : cycles)
            if (a < b && c < d) return false;
    }
    return true;
}

/// Largest r in [n] with z(r) < -r, or 0.  Defined for atomic involutions.
inline int radius(const SignedInvolution& z) {
    if (!is_atomic(z)) throw std::invalid_argument("radius: involution is not atomic");
    for (int r = z.rank(); r >= 1; --r)
        if (z.perm()(r) < -r) return r;
    return 0;
}

/// The unique atomic involution with z(r+1) = -r whose values at
/// r+2, ..., 2r are the signed numbers i * eps_i listed increasingly
/// (r = floor(n/2), n >= 2).
inline SignedInvolution eta(const std::vector<int>& eps, int n) {
    if (n < 2) throw std::invalid_argument("eta: need n >= 2");
    const int r = n / 2;
    if (static_cast<int>(eps.size()) != r - 1)
        throw std::invalid_argument("eta: sign sequence must have length " +
                                    std::to_string(r - 1));
    std::vector<int> a;
    for (int i = 1; i <= r - 1; ++i) {
        if (eps[i - 1] != 1 && eps[i - 1] != -1)
            throw std::invalid_argument("eta: signs must be +1 or -1");
        a.push_back(i * eps[i - 1]);
    }
    std::sort(a.begin(), a.end());
    std::vector<int> window(n, 0);
    auto set = [&](int i, int v) {
        window[i - 1] = v;
        if (std::abs(v) != i) window[std::abs(v) - 1] = v > 0 ? i : -i;
    };
    set(r + 1, -r);
    for (int i = 1; i <= r - 1; ++i) set(r + 1 + i, a[i - 1]);
    if (n == 2 * r + 1) window[n - 1] = n;
    return SignedInvolution(SignedPermutation(std::move(window)));
}

// ---------------------------------------------------------------------------
// The bijections pi0 and pi1
// ---------------------------------------------------------------------------

/// Splits an atomic involution without negated points into its radius-r core
/// (an element of Y_2r, via order-preserving relabeling of [-r,r] and its
/// image) and the standardized remainder (an atomic involution of S_n).
inline std::pair<SignedInvolution, SetPermutation> pi0(const SignedInvolution& x) {
    if (!is_atomic(x) || !x.neg().empty())
        throw std::invalid_argument("pi0: input must be atomic with no negated points");
    const int n = x.rank();
    const int r = radius(x);
    if (r == 0) {
        std::vector<int> line(n);
        for (int i = 1; i <= n; ++i) line[i - 1] = x.perm()(i);
        return {SignedInvolution(SignedPermutation::identity(0)),
                SetPermutation::from_line(line)};
    }
    // I = [-r,r] u x([-r,r]), J = positive part of x([-r,r])
    std::vector<int> I, J;
    for (int i = -r; i <= r; ++i) {
        if (i == 0) continue;
        I.push_back(i);
        I.push_back(x.perm()(i));
        if (x.perm()(i) > 0) J.push_back(x.perm()(i));
    }
    std::sort(I.begin(), I.end());
    std::sort(J.begin(), J.end());
    if (std::adjacent_find(I.begin(), I.end()) != I.end())
        throw std::invalid_argument("pi0: radius structure violated");

    std::vector<int> y_window(2 * r);
    auto phi_inv = [&](int v) {  // I -> [-2r,2r]
        const int k = static_cast<int>(std::lower_bound(I.begin(), I.end(), v) - I.begin());
        return k < 2 * r ? k - 2 * r : k - 2 * r + 1;
    };
    auto phi = [&](int v) { return v < 0 ? I[v + 2 * r] : I[v + 2 * r - 1]; };
    for (int i = 1; i <= 2 * r; ++i) y_window[i - 1] = phi_inv(x.perm()(phi(i)));

    std::vector<int> z_line(n);
    for (int i = 1; i <= r; ++i) {
        z_line[i - 1] = J[i - 1];
        z_line[J[i - 1] - 1] = i;
    }
    for (int i = 1; i <= n; ++i) {
        const bool used = i <= r || std::binary_search(J.begin(), J.end(), i);
        if (!used) z_line[i - 1] = x.perm()(i);
    }
    return {SignedInvolution(SignedPermutation(std::move(y_window))),
            SetPermutation::from_line(z_line)};
}

inline SignedInvolution pi0_inverse(const SignedInvolution& y, const SetPermutation& z,
                                    int n, int r) {
    if (y.rank() != 2 * r) throw std::invalid_argument("pi0_inverse: core must lie in W_2r");
    if (!z.is_involution()) throw std::invalid_argument("pi0_inverse: z must be an involution");
    if (r == 0) {
        std::vector<int> window(n);
        for (int i = 1; i <= n; ++i) window[i - 1] = z.apply(i);
        return SignedInvolution(SignedPermutation(std::move(window)));
    }
    std::vector<int> E;  // [-r,r] u z([r]) u -z([r]), sorted
    for (int i = 1; i <= r; ++i) {
        E.push_back(i);
        E.push_back(-i);
        E.push_back(z.apply(i));
        E.push_back(-z.apply(i));
    }
    std::sort(E.begin(), E.end());
    E.erase(std::unique(E.begin(), E.end()), E.end());
    if (static_cast<int>(E.size()) != 4 * r)
        throw std::invalid_argument("pi0_inverse: z does not move [r] outside itself");
    auto theta = [&](int v) { return v < 0 ? E[v + 2 * r] : E[v + 2 * r - 1]; };
    auto theta_inv = [&](int v) {
        const int k = static_cast<int>(std::lower_bound(E.begin(), E.end(), v) - E.begin());
        return k < 2 * r ? k - 2 * r : k - 2 * r + 1;
    };
    std::vector<int> window(n, 0);
    for (int i = 1; i <= n; ++i) {
        if (std::binary_search(E.begin(), E.end(), i))
            window[i - 1] = theta(y.perm()(theta_inv(i)));
        else
            window[i - 1] = z.apply(i);
    }
    return SignedInvolution(SignedPermutation(std::move(window)));
}

/// Removes the unique symmetric edge {-m, m} of an atomic involution with one
/// negated point and standardizes, yielding (y, m) with y atomic in W_{n-1}.
inline std::pair<SignedInvolution, int> pi1(const SignedInvolution& x) {
    if (!is_atomic(x) || x.neg().size() != 1)
        throw std::invalid_argument("pi1: input must be atomic with one negated point");
    const int m = x.neg().front();
    const int n = x.rank();
    auto psi = [&](int v) { return std::abs(v) < m ? v : (v > 0 ? v + 1 : v - 1); };
    auto psi_inv = [&](int v) { return std::abs(v) < m ? v : (v > 0 ? v - 1 : v + 1); };
    std::vector<int> window(n - 1);
    for (int i = 1; i <= n - 1; ++i) window[i - 1] = psi_inv(x.perm()(psi(i)));
    return {SignedInvolution(SignedPermutation(std::move(window))), m};
}

inline SignedInvolution pi1_inverse(const SignedInvolution& y, int m) {
    const int n = y.rank();
    if (m < 1 || m > n + 1) throw std::invalid_argument("pi1_inverse: m out of range");
    auto psi = [&](int v) { return std::abs(v) < m ? v : (v > 0 ? v + 1 : v - 1); };
    std::vector<int> window(n + 1, 0);
    window[m - 1] = -m;
    for (int i = 1; i <= n; ++i) window[psi(i) - 1] = psi(y.perm()(i));
    return SignedInvolution(SignedPermutation(std::move(window)));
}

// ---------------------------------------------------------------------------
// Dispersed Dyck paths
// ---------------------------------------------------------------------------

struct DyckPath {
    enum class Step { Up, Down, Flat };
    std::vector<Step> steps;

    /// Partial sums stay nonnegative, flats occur only at height zero, and
    /// the endpoint height is even.
    bool valid() const {
        int h = 0;
        for (Step s : steps) {
            if (s == Step::Up) ++h;
            if (s == Step::Down) --h;
            if (h < 0) return false;
            if (s == Step::Flat && h != 0) return false;
        }
        return h % 2 == 0;
    }

    int up_down_steps() const {
        int c = 0;
        for (Step s : steps) c += s != Step::Flat;
        return c;
    }

    std::string str() const {
        std::string s;
        for (Step st : steps)
            s += st == Step::Up ? 'U' : st == Step::Down ? 'D' : 'F';
        return s;
    }

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
};

/// All paths in D_{n,k} (n steps, exactly n-2k flats), lexicographic in the
/// step order Up < Down < Flat.
inline std::vector<DyckPath> dyck_paths(int n, int k) {
    if (k < 0 || 2 * k > n) throw std::invalid_argument("dyck_paths: need 0 <= k <= n/2");
    std::vector<DyckPath> out;
    DyckPath cur;
    auto rec = [&](auto&& self, int h, int flats) -> void {
        const int left = n - static_cast<int>(cur.steps.size());
        if (left == 0) {
            if (flats == n - 2 * k && h % 2 == 0) out.push_back(cur);
            return;
        }
        if (h + left < 0) return;
        cur.steps.push_back(DyckPath::Step::Up);
        self(self, h + 1, flats);
        cur.steps.pop_back();
        if (h > 0) {
            cur.steps.push_back(DyckPath::Step::Down);
            self(self, h - 1, flats);
            cur.steps.pop_back();
        }
        if (h == 0 && flats < n - 2 * k) {
            cur.steps.push_back(DyckPath::Step::Flat);
            self(self, h, flats + 1);
            cur.steps.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// The step at i reads off how z moves j = -n+i-1: flat for a fixed point,
/// up when j < z(j), down when z(j) < j.
inline DyckPath involution_to_dyck(const SignedInvolution& z) {
    if (!is_atomic(z) || !z.neg().empty())
        throw std::invalid_argument("involution_to_dyck: input must be atomic with neg = 0");
    const int n = z.rank();
    DyckPath p;
    for (int i = 1; i <= n; ++i) {
        const int j = -n + i - 1;
        const int v = z.perm()(j);
        p.steps.push_back(v == j   ? DyckPath::Step::Flat
                          : j < v  ? DyckPath::Step::Up
                                   : DyckPath::Step::Down);
    }
    return p;
}

/// Left endpoints pair with right endpoints reversed: z(a_i) = -a_{2k-1-i}.
inline SignedInvolution dyck_to_involution(const DyckPath& p) {
    if (!p.valid()) throw std::invalid_argument("dyck_to_involution: invalid path");
    const int n = static_cast<int>(p.steps.size());
    std::vector<int> ends;
    for (int i = 1; i <= n; ++i) {
        if (p.steps[i - 1] == DyckPath::Step::Up) ends.push_back(-n + i - 1);
        if (p.steps[i - 1] == DyckPath::Step::Down) ends.push_back(n - i + 1);
    }
    std::sort(ends.begin(), ends.end());
    const int two_k = static_cast<int>(ends.size());
    std::vector<int> window(n);
    std::iota(window.begin(), window.end(), 1);
    auto set = [&](int i, int v) {
        if (i > 0)
            window[i - 1] = v;
        else
            window[-i - 1] = -v;
    };
    for (int i = 0; i < two_k; ++i) set(ends[i], -ends[two_k - 1 - i]);
    return SignedInvolution(SignedPermutation(std::move(window)));
}

inline std::vector<std::pair<DyckPath, SignedInvolution>> dyck_bijection(int n, int k) {
    std::vector<std::pair<DyckPath, SignedInvolution>> out;
    for (const auto& p : dyck_paths(n, k)) out.emplace_back(p, dyck_to_involution(p));
    return out;
}

// ---------------------------------------------------------------------------
// Census
// ---------------------------------------------------------------------------

struct CensusRow {
    int n = 0;
    std::string klass;  // a0 | a1 | a | X0 | X1 | X0k | Z | D
    int r = -1;         // radius, where stratified
    int k = -1;         // absolute-length class, where stratified
    BigCount enumerated = 0;
    BigCount formula = 0;
    bool match = false;
};

namespace detail {

inline BigCount a0_formula(int n) {
    BigCount s = 0;
    for (int k = 0; k <= n / 2; ++k) s += binomial(n, k);
    return s;
}

inline BigCount x0_formula(int n, int r) { return pow2(r - 1) * binomial(n - r, (n + 1) / 2); }

inline BigCount x1_formula(int n, int r) {
    // |X^1_{n,r}| in terms of the (n-1)-row: (ceil((n-1)/2)+1) * ceil(2^{r-1}) * C(n-r, ceil((n-1)/2)+1)
    const int m = n - 1;
    if (m < 0) return 0;
    return (BigCount(m / 2 + 1) + (m % 2)) * pow2(r - 1) * binomial(m - r + 1, (m + 1) / 2 + 1);
}

inline BigCount a1_formula(int n) {
    if (n % 2 == 1) {
        BigCount v = BigCount(n + 1) * pow2(n);  // (n+1) 2^{n-2}, exact for n >= 1
        return v / 4;
    }
    BigCount v = (pow2(n) - binomial(n, n / 2)) * (n + 2);
    return v / 4;
}

inline BigCount a_formula(int n) {
    if (n % 2 == 1) {
        BigCount v = BigCount(n + 3) * pow2(n);
        return v / 4;
    }
    BigCount v = BigCount(n + 4) * pow2(n) - BigCount(n) * binomial(n, n / 2);
    return v / 4;
}

inline BigCount z_formula(int n, int r) { return binomial(n - r, (n + 1) / 2); }

}  // namespace detail

/// Atomic involutions of S_n with i < z(i) for all i in [r].
inline std::vector<SetPermutation> atomic_sn(int n, int r = 0) {
    std::vector<SetPermutation> out;
    for (const auto& z : involutions_sn(n)) {
        if (n > 0 && !is_atomic(SignedInvolution(embed_symmetric(z)))) continue;
        bool ok = true;
        for (int i = 1; i <= r && ok; ++i) ok = i < z.apply(i);
        if (ok) out.push_back(z);
    }
    return out;
}

/// Enumerated counts against the closed forms, for every class and stratum.
/// With enumerate = false only the formula column is filled.
inline std::vector<CensusRow> census(int n, bool enumerate = true) {
    std::vector<CensusRow> rows;
    std::vector<SignedInvolution> x0, x1;
    if (enumerate)
        for (const auto& z : involutions(n)) {
            if (!is_atomic(z)) continue;
            (z.neg().empty() ? x0 : x1).push_back(z);
        }

    auto push = [&](std::string klass, int r, int k, BigCount enumerated, BigCount formula) {
        CensusRow row;
        row.n = n;
        row.klass = std::move(klass);
        row.r = r;
        row.k = k;
        row.enumerated = enumerate ? enumerated : formula;
        row.formula = formula;
        row.match = row.enumerated == row.formula;
        rows.push_back(std::move(row));
    };

    push("a0", -1, -1, x0.size(), detail::a0_formula(n));
    push("a1", -1, -1, x1.size(), detail::a1_formula(n));
    push("a", -1, -1, x0.size() + x1.size(), detail::a_formula(n));
    for (int r = 0; r <= n / 2; ++r) {
        const auto count = [&](const std::vector<SignedInvolution>& xs) {
            return std::count_if(xs.begin(), xs.end(),
                                 [&](const SignedInvolution& z) { return radius(z) == r; });
        };
        push("X0", r, -1, count(x0), detail::x0_formula(n, r));
        push("X1", r, -1, count(x1), detail::x1_formula(n, r));
    }
    for (int k = 0; k <= n / 2; ++k) {
        const auto c = std::count_if(x0.begin(), x0.end(), [&](const SignedInvolution& z) {
            return absolute_length(z.perm()) == k;
        });
        push("X0k", -1, k, c, binomial(n, k));
        push("D", -1, k,
             enumerate ? BigCount(dyck_paths(n, k).size()) : binomial(n, k),
             binomial(n, k));
    }
    for (int r = 0; r <= n / 2; ++r)
        push("Z", r, -1, enumerate ? BigCount(atomic_sn(n, r).size()) : detail::z_formula(n, r),
             detail::z_formula(n, r));
    return rows;
}

}  // namespace atomkit
