#pragma once

// The equivalence relations whose classes are the inverse Hecke atom sets:
// approx_A (triple rewrites cba ~ cab ~ bca anywhere) and approx_B (approx_A
// plus two families of rewrites touching only the first letters).

#include <set>

#include "atomkit/hecke.hpp"

namespace atomkit {

enum class MoveRuleset { approxA, approxB };

namespace detail {

/// The three-letter family {cba, cab, bca} on values x < y < z placed at a
/// fixed position triple; emits the other members of whichever family the
/// current arrangement belongs to.
inline void triple_moves_into(const std::vector<int>& w, int p,
                              std::vector<std::vector<int>>& out) {
    int lo = std::min({w[p], w[p + 1], w[p + 2]});
    int hi = std::max({w[p], w[p + 1], w[p + 2]});
    int mid = w[p] + w[p + 1] + w[p + 2] - lo - hi;
    const std::vector<int> cba{hi, mid, lo}, cab{hi, lo, mid}, bca{mid, hi, lo};
    const std::vector<int> cur{w[p], w[p + 1], w[p + 2]};
    if (cur != cba && cur != cab && cur != bca) return;
    for (const auto& form : {cba, cab, bca}) {
        if (form == cur) continue;
        auto win = w;
        win[p] = form[0];
        win[p + 1] = form[1];
        win[p + 2] = form[2];
        out.push_back(std::move(win));
    }
}

/// Initial two-letter family {-a-b, -b-a, a-b} with 0 < a < b, at positions
/// (p, p+1); used with p = 0 and, prefixed by -c, with p = 1.
inline void initial_pair_moves_into(const std::vector<int>& w, int p, int abs_bound,
                                    std::vector<std::vector<int>>& out) {
    const int x = w[p], y = w[p + 1];
    int a, b;
    if (x < 0 && y < 0) {
        a = std::min(-x, -y);
        b = std::max(-x, -y);
    } else if (x > 0 && y < 0 && x < -y) {
        a = x;
        b = -y;
    } else {
        return;
    }
    if (b >= abs_bound) return;
    const std::pair<int, int> forms[3] = {{-a, -b}, {-b, -a}, {a, -b}};
    for (auto [u, v] : forms) {
        if (u == x && v == y) continue;
        auto win = w;
        win[p] = u;
        win[p + 1] = v;
        out.push_back(std::move(win));
    }
}

inline void move_neighbors_into(const SignedPermutation& w, MoveRuleset rules,
                                std::vector<SignedPermutation>& out) {
    std::vector<std::vector<int>> wins;
    const auto& win = w.window();
    for (int p = 0; p + 2 < w.rank(); ++p) triple_moves_into(win, p, wins);
    if (rules == MoveRuleset::approxB) {
        constexpr int kNoBound = 1 << 20;
        if (w.rank() >= 2) initial_pair_moves_into(win, 0, kNoBound, wins);
        if (w.rank() >= 3 && win[0] < 0) initial_pair_moves_into(win, 1, -win[0], wins);
    }
    for (auto& v : wins) out.emplace_back(std::move(v));
}

inline std::vector<SignedPermutation> move_neighbors(const SignedPermutation& w,
                                                     MoveRuleset rules) {
    std::vector<SignedPermutation> out;
    move_neighbors_into(w, rules, out);
    return out;
}

}  // namespace detail

/// BFS closure of {w} under the ruleset; for approxB the class is the inverse
/// Hecke atom set of w o w^{-1}.  Sorted.
inline std::vector<SignedPermutation> equivalence_class(const SignedPermutation& w,
                                                        MoveRuleset rules) {
    return bfs_closure(std::vector<SignedPermutation>{w},
                       [rules](const SignedPermutation& v, std::vector<SignedPermutation>& out) {
                           detail::move_neighbors_into(v, rules, out);
                       });
}

/// For each strictly increasing all-negative prefix w_1 < ... < w_i < w_{i+1} < 0,
/// the two words reached by swapping the pair or by flipping it to (a, -b);
/// both are approx_B-equivalent to w.  Empty when the first letter is not
/// negative.
inline std::vector<SignedPermutation> extended_initial_move(const SignedPermutation& w) {
    std::vector<SignedPermutation> out;
    const auto& win = w.window();
    for (int i = 0; i + 1 < w.rank(); ++i) {
        bool increasing_negative = win[i + 1] < 0;
        for (int k = 0; k <= i && increasing_negative; ++k)
            if (win[k] >= (k == i ? win[i + 1] : win[k + 1])) increasing_negative = false;
        if (!increasing_negative) break;
        auto swapped = win;
        std::swap(swapped[i], swapped[i + 1]);
        out.emplace_back(std::move(swapped));
        auto flipped = win;
        flipped[i] = -win[i + 1];
        flipped[i + 1] = win[i];
        out.emplace_back(std::move(flipped));
    }
    return out;
}

}  // namespace atomkit
