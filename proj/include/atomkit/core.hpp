#pragma once

// Signed permutations (hyperoctahedral group W_n), permutations of an
// arbitrary finite integer set (S_X), and the word combinatorics both share:
// descents, sorting subwords, length statistics and the order-preserving
// embedding W_n -> S_{2n}.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace atomkit {

/// A word is a finite sequence of nonzero integers.  One-line representations
/// of permutations are words with pairwise distinct letters; intermediate
/// words (e.g. before dedupe_first) may repeat letters.
using Word = std::vector<int>;

// ---------------------------------------------------------------------------
// Word operations
// ---------------------------------------------------------------------------

/// Positions p (0-based) with w[p] > w[p+1].
inline std::vector<int> descent_positions(const Word& w) {
    std::vector<int> out;
    for (int p = 0; p + 1 < static_cast<int>(w.size()); ++p)
        if (w[p] > w[p + 1]) out.push_back(p);
    return out;
}

/// Subword formed by omitting w[p+1] for every descent (w[p], w[p+1]).
inline Word sort_left(const Word& w) {
    std::vector<bool> drop(w.size(), false);
    for (int p : descent_positions(w)) drop[p + 1] = true;
    Word out;
    for (size_t i = 0; i < w.size(); ++i)
        if (!drop[i]) out.push_back(w[i]);
    return out;
}

/// Subword formed by omitting w[p] for every descent (w[p], w[p+1]).
inline Word sort_right(const Word& w) {
    std::vector<bool> drop(w.size(), false);
    for (int p : descent_positions(w)) drop[p] = true;
    Word out;
    for (size_t i = 0; i < w.size(); ++i)
        if (!drop[i]) out.push_back(w[i]);
    return out;
}

/// [[w]]: omit every repeated letter after its first appearance.
inline Word dedupe_first(const Word& w) {
    Word out;
    for (int x : w)
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    return out;
}

enum class ConsecutivePattern {
    p321,    // some adjacent triple strictly decreasing
    negneg,  // some adjacent pair with 0 > w[p] > w[p+1]
};

inline bool has_consecutive_pattern(const Word& w, ConsecutivePattern kind) {
    if (kind == ConsecutivePattern::p321) {
        for (size_t p = 0; p + 2 < w.size(); ++p)
            if (w[p] > w[p + 1] && w[p + 1] > w[p + 2]) return true;
        return false;
    }
    for (size_t p = 0; p + 1 < w.size(); ++p)
        if (0 > w[p] && w[p] > w[p + 1]) return true;
    return false;
}

// ---------------------------------------------------------------------------
// SignedPermutation
// ---------------------------------------------------------------------------

/// Element of W_n stored through its window (w(1),...,w(n)).  The full map on
/// [-n,n] is implied by w(-i) = -w(i).  Immutable after construction.
class SignedPermutation {
public:
    SignedPermutation() = default;

    explicit SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
        const int n = rank();
        std::vector<bool> seen(n + 1, false);
        for (int i = 0; i < n; ++i) {
            const int a = std::abs(window_[i]);
            if (a == 0)
                throw std::invalid_argument("entry " + std::to_string(i + 1) + ": zero entry");
            if (a > n)
                throw std::invalid_argument("entry " + std::to_string(i + 1) +
                                            ": absolute value " + std::to_string(a) +
                                            " out of range for rank " + std::to_string(n));
            if (seen[a])
                throw std::invalid_argument("entry " + std::to_string(i + 1) +
                                            ": duplicate absolute value " + std::to_string(a));
            seen[a] = true;
        }
    }

    static SignedPermutation identity(int n) {
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 1);
        return SignedPermutation(std::move(w));
    }

    /// Generator t_i: t_0 = (-1,1), t_i = (i,i+1)(-i,-i-1) for 1 <= i < n.
    static SignedPermutation generator(int n, int i) {
        SignedPermutation t = identity(n);
        if (i == 0) {
            t.window_.at(0) = -1;
        } else {
            t.window_.at(i - 1) = i + 1;
            t.window_.at(i) = i;
        }
        return t;
    }

    int rank() const { return static_cast<int>(window_.size()); }
    const std::vector<int>& window() const { return window_; }

    /// Value at any i in [-n,-1] or [1,n].
    int operator()(int i) const {
        return i > 0 ? window_[i - 1] : -window_[-i - 1];
    }

    bool is_identity() const {
        for (int i = 0; i < rank(); ++i)
            if (window_[i] != i + 1) return false;
        return true;
    }

    SignedPermutation inverse() const {
        std::vector<int> inv(rank());
        for (int i = 1; i <= rank(); ++i) {
            const int j = window_[i - 1];
            if (j > 0)
                inv[j - 1] = i;
            else
                inv[-j - 1] = -i;
        }
        return SignedPermutation(std::move(inv));
    }

    bool is_involution() const { return *this == inverse(); }

    /// Right multiplication by t_i (swaps window positions; t_0 negates w(1)).
    SignedPermutation right_multiplied(int i) const {
        std::vector<int> w = window_;
        if (i == 0)
            w.at(0) = -w.at(0);
        else
            std::swap(w.at(i - 1), w.at(i));
        return SignedPermutation(std::move(w));
    }

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    friend auto operator<=>(const SignedPermutation& a, const SignedPermutation& b) {
        return a.window_ <=> b.window_;
    }

private:
    std::vector<int> window_;
};

/// u * v, the map i -> u(v(i)).
inline SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v) {
    if (u.rank() != v.rank())
        throw std::invalid_argument("rank mismatch: " + std::to_string(u.rank()) + " vs " +
                                    std::to_string(v.rank()));
    std::vector<int> w(u.rank());
    for (int i = 1; i <= u.rank(); ++i) w[i - 1] = u(v(i));
    return SignedPermutation(std::move(w));
}

inline SignedPermutation inverse(const SignedPermutation& w) { return w.inverse(); }

/// Number of window entries that are negative.
inline int neg_count(const SignedPermutation& w) {
    int c = 0;
    for (int x : w.window()) c += x < 0;
    return c;
}

/// Coxeter length: (inv(w) + neg_count(w)) / 2 with inversions counted over
/// the whole domain [-n,n].
inline int coxeter_length(const SignedPermutation& w) {
    const int n = w.rank();
    int inv = 0;
    for (int i = -n; i <= n; ++i) {
        if (i == 0) continue;
        for (int j = i + 1; j <= n; ++j) {
            if (j == 0) continue;
            inv += w(i) > w(j);
        }
    }
    return (inv + neg_count(w)) / 2;
}

/// Minimal number of reflections multiplying to w, computed from the cycle
/// count on [-n,n] and the number of negation-stable cycles.
inline int absolute_length(const SignedPermutation& w) {
    const int n = w.rank();
    auto idx = [n](int i) { return i > 0 ? n + i - 1 : n + i; };
    std::vector<bool> seen(2 * n, false);
    int cycles = 0, stable = 0;
    for (int start = -n; start <= n; ++start) {
        if (start == 0 || seen[idx(start)]) continue;
        ++cycles;
        std::vector<int> orbit;
        int i = start;
        while (!seen[idx(i)]) {
            seen[idx(i)] = true;
            orbit.push_back(i);
            i = w(i);
        }
        bool neg_closed = true;
        for (int x : orbit)
            if (std::find(orbit.begin(), orbit.end(), -x) == orbit.end()) {
                neg_closed = false;
                break;
            }
        stable += neg_closed;
    }
    return n - (cycles - stable) / 2;
}

/// Indices i with l(w t_i) < l(w): with the convention w(0) = 0, index i is a
/// descent exactly when w(i) > w(i+1).
inline std::vector<int> right_descents(const SignedPermutation& w) {
    std::vector<int> out;
    const auto& win = w.window();
    if (!win.empty() && win[0] < 0) out.push_back(0);
    for (int i = 1; i < w.rank(); ++i)
        if (win[i - 1] > win[i]) out.push_back(i);
    return out;
}

inline std::vector<int> left_descents(const SignedPermutation& w) {
    return right_descents(w.inverse());
}

/// Reduced word for w obtained by repeatedly stripping the smallest right
/// descent.  Deterministic; its length equals coxeter_length(w).
inline std::vector<int> canonical_reduced_word(const SignedPermutation& w) {
    std::vector<int> letters;
    SignedPermutation cur = w;
    for (;;) {
        auto ds = right_descents(cur);
        if (ds.empty()) break;
        letters.push_back(ds.front());
        cur = cur.right_multiplied(ds.front());
    }
    std::reverse(letters.begin(), letters.end());
    return letters;
}

/// All n^2 reflections of W_n: (i,-i), (i,-j)(j,-i) and (i,j)(-i,-j),
/// sorted lexicographically by window.
inline std::vector<SignedPermutation> reflections(int n) {
    if (n < 1) throw std::invalid_argument("reflections: rank must be positive");
    std::vector<SignedPermutation> out;
    for (int i = 1; i <= n; ++i) {
        auto w = SignedPermutation::identity(n).window();
        w[i - 1] = -i;
        out.emplace_back(std::move(w));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            auto s = SignedPermutation::identity(n).window();
            s[i - 1] = -j;
            s[j - 1] = -i;
            out.emplace_back(std::move(s));
            auto t = SignedPermutation::identity(n).window();
            t[i - 1] = j;
            t[j - 1] = i;
            out.emplace_back(std::move(t));
        }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Text format: comma-separated signed decimal integers.
// ---------------------------------------------------------------------------

inline std::string format(const SignedPermutation& w) {
    std::string s;
    for (int i = 0; i < w.rank(); ++i) {
        if (i) s += ',';
        s += std::to_string(w.window()[i]);
    }
    return s;
}

inline SignedPermutation parse_signed(const std::string& text) {
    std::vector<int> window;
    size_t pos = 0;
    int entry = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string tok = text.substr(pos, comma - pos);
        ++entry;
        // strip surrounding blanks
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        if (tok.empty())
            throw std::invalid_argument("entry " + std::to_string(entry) + ": empty entry");
        size_t used = 0;
        int val;
        try {
            val = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("entry " + std::to_string(entry) +
                                        ": not an integer: '" + tok + "'");
        }
        if (used != tok.size())
            throw std::invalid_argument("entry " + std::to_string(entry) +
                                        ": trailing junk in '" + tok + "'");
        window.push_back(val);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return SignedPermutation(std::move(window));
}

// ---------------------------------------------------------------------------
// SetPermutation: the group S_X for a finite set X of integers, with Coxeter
// generators (x_i, x_{i+1}) indexed by i = 1..|X|-1.
// ---------------------------------------------------------------------------

class SetPermutation {
public:
    SetPermutation() = default;

    SetPermutation(std::vector<int> domain, std::vector<int> one_line)
        : domain_(std::move(domain)), line_(std::move(one_line)) {
        if (!std::is_sorted(domain_.begin(), domain_.end()) ||
            std::adjacent_find(domain_.begin(), domain_.end()) != domain_.end())
            throw std::invalid_argument("domain must be sorted and distinct");
        if (line_.size() != domain_.size())
            throw std::invalid_argument("one-line length differs from domain size");
        auto sorted = line_;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != domain_) throw std::invalid_argument("images are not a bijection of the domain");
    }

    static SetPermutation identity(std::vector<int> domain) {
        auto line = domain;
        std::sort(line.begin(), line.end());
        return SetPermutation(std::move(domain), line);
    }

    /// S_n on the set {1,...,n}.
    static SetPermutation from_line(const std::vector<int>& one_line) {
        std::vector<int> dom(one_line.size());
        std::iota(dom.begin(), dom.end(), 1);
        return SetPermutation(std::move(dom), one_line);
    }

    int size() const { return static_cast<int>(domain_.size()); }
    const std::vector<int>& domain() const { return domain_; }
    const std::vector<int>& one_line() const { return line_; }

    int apply(int x) const {
        auto it = std::lower_bound(domain_.begin(), domain_.end(), x);
        if (it == domain_.end() || *it != x)
            throw std::invalid_argument("value " + std::to_string(x) + " not in domain");
        return line_[it - domain_.begin()];
    }

    bool is_identity() const { return line_ == domain_; }
    bool is_involution() const { return *this == inverse(); }

    SetPermutation inverse() const {
        std::vector<int> inv(line_.size());
        for (size_t i = 0; i < line_.size(); ++i) {
            auto it = std::lower_bound(domain_.begin(), domain_.end(), line_[i]);
            inv[it - domain_.begin()] = domain_[i];
        }
        return SetPermutation(domain_, std::move(inv));
    }

    /// Right multiplication by the generator (x_i, x_{i+1}), 1 <= i < |X|.
    SetPermutation right_multiplied(int i) const {
        auto line = line_;
        std::swap(line.at(i - 1), line.at(i));
        return SetPermutation(domain_, std::move(line));
    }

    friend bool operator==(const SetPermutation&, const SetPermutation&) = default;
    friend auto operator<=>(const SetPermutation& a, const SetPermutation& b) {
        if (auto c = a.domain_ <=> b.domain_; c != 0) return c;
        return a.line_ <=> b.line_;
    }

private:
    std::vector<int> domain_;
    std::vector<int> line_;  // image of domain_[k] at position k
};

inline SetPermutation compose(const SetPermutation& u, const SetPermutation& v) {
    if (u.domain() != v.domain()) throw std::invalid_argument("domain mismatch");
    std::vector<int> line(v.size());
    for (int k = 0; k < v.size(); ++k) line[k] = u.apply(v.one_line()[k]);
    return SetPermutation(u.domain(), std::move(line));
}

/// Coxeter length of S_X = number of one-line inversions.
inline int coxeter_length(const SetPermutation& w) {
    int inv = 0;
    const auto& line = w.one_line();
    for (size_t i = 0; i < line.size(); ++i)
        for (size_t j = i + 1; j < line.size(); ++j) inv += line[i] > line[j];
    return inv;
}

/// Generator indices i (1-based) with w(x_i) > w(x_{i+1}).
inline std::vector<int> right_descents(const SetPermutation& w) {
    std::vector<int> out;
    for (int i = 1; i < w.size(); ++i)
        if (w.one_line()[i - 1] > w.one_line()[i]) out.push_back(i);
    return out;
}

inline std::vector<int> canonical_reduced_word(const SetPermutation& w) {
    std::vector<int> letters;
    SetPermutation cur = w;
    for (;;) {
        auto ds = right_descents(cur);
        if (ds.empty()) break;
        letters.push_back(ds.front());
        cur = cur.right_multiplied(ds.front());
    }
    std::reverse(letters.begin(), letters.end());
    return letters;
}

/// Number of 2-cycles; equals the absolute length for involutions in S_X.
inline int absolute_length(const SetPermutation& w) {
    int cycles = 0;
    std::vector<bool> seen(w.size(), false);
    for (int k = 0; k < w.size(); ++k) {
        if (seen[k]) continue;
        ++cycles;
        int x = w.domain()[k];
        while (true) {
            auto it = std::lower_bound(w.domain().begin(), w.domain().end(), x);
            int idx = static_cast<int>(it - w.domain().begin());
            if (seen[idx]) break;
            seen[idx] = true;
            x = w.one_line()[idx];
        }
    }
    return w.size() - cycles;
}

// ---------------------------------------------------------------------------
// Embeddings
// ---------------------------------------------------------------------------

/// The order isomorphism [-n,n] \ {0} -> [2n].
inline int psi_map(int i, int n) { return i > 0 ? i + n : i + n + 1; }
inline int psi_inverse_map(int j, int n) { return j > n ? j - n : j - n - 1; }

/// Conjugate w through psi: an injective homomorphism W_n -> S_{2n} that is
/// also a homomorphism of the Demazure monoids (t_0 -> s_n, t_i -> s_{n+i}s_{n-i}).
inline SetPermutation psi_embed(const SignedPermutation& w) {
    const int n = w.rank();
    std::vector<int> line(2 * n);
    for (int j = 1; j <= 2 * n; ++j) line[j - 1] = psi_map(w(psi_inverse_map(j, n)), n);
    std::vector<int> dom(2 * n);
    std::iota(dom.begin(), dom.end(), 1);
    return SetPermutation(std::move(dom), std::move(line));
}

/// Inclusion S_n -> W_n sending s_i to t_i (one-line representations agree).
inline SignedPermutation embed_symmetric(const SetPermutation& w) {
    for (int x : w.domain())
        if (x < 1) throw std::invalid_argument("embed_symmetric: domain must be [n]");
    return SignedPermutation(w.one_line());
}

// ---------------------------------------------------------------------------
// Closure engine
// ---------------------------------------------------------------------------

/// Breadth-first closure of a seed set under a pluggable move table.
/// `moves(v, out)` appends the neighbors of v.  Result is sorted.
template <typename T, typename MoveFn>
std::vector<T> bfs_closure(std::vector<T> seeds, MoveFn&& moves) {
    std::set<T> seen(seeds.begin(), seeds.end());
    std::vector<T> frontier = std::move(seeds);
    std::vector<T> scratch;
    while (!frontier.empty()) {
        std::vector<T> next;
        for (const auto& v : frontier) {
            scratch.clear();
            moves(v, scratch);
            for (auto& m : scratch)
                if (seen.insert(m).second) next.push_back(std::move(m));
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

}  // namespace atomkit
