#include <catch2/catch_amalgamated.hpp>

#include "atomkit/core.hpp"
#include "atomkit/hecke.hpp"

using namespace atomkit;

namespace {

SignedPermutation sp(const std::string& s) { return parse_signed(s); }

}  // namespace

TEST_CASE("parse and format round-trip") {
    CHECK(sp("1,2,3") == SignedPermutation::identity(3));
    CHECK(format(sp("-2,-1")) == "-2,-1");
    CHECK(sp(" -3 , 1 ,-2 ") == SignedPermutation(std::vector<int>{-3, 1, -2}));

    CHECK_THROWS_WITH(sp("1,1"), Catch::Matchers::ContainsSubstring("duplicate absolute value"));
    CHECK_THROWS_WITH(sp("1,3"), Catch::Matchers::ContainsSubstring("out of range"));
    CHECK_THROWS_WITH(sp("0,1"), Catch::Matchers::ContainsSubstring("zero"));
    CHECK_THROWS_WITH(sp("2,x"), Catch::Matchers::ContainsSubstring("entry 2"));

    // -2,-1 is the reduced product t0 t1 t0 in W_2
    auto t0 = SignedPermutation::generator(2, 0);
    auto t1 = SignedPermutation::generator(2, 1);
    CHECK(compose(compose(t0, t1), t0) == sp("-2,-1"));
}

TEST_CASE("compose and inverse") {
    auto w = sp("-3,1,-2");
    CHECK(compose(SignedPermutation::identity(3), w) == w);
    CHECK(compose(w, w.inverse()) == SignedPermutation::identity(3));

    // i -> u(v(i))
    auto t0 = SignedPermutation::generator(2, 0);
    auto t1 = SignedPermutation::generator(2, 1);
    CHECK(compose(t0, t1) == sp("2,-1"));
    CHECK(compose(t1, t0) == sp("-2,1"));

    CHECK(sp("2,-1").inverse() == sp("-2,1"));
    CHECK_THROWS_AS(compose(t0, SignedPermutation::identity(3)), std::invalid_argument);

    for (const auto& z : involutions(3)) CHECK(z.perm().inverse() == z.perm());
}

TEST_CASE("length statistics") {
    CHECK(coxeter_length(SignedPermutation::identity(4)) == 0);
    CHECK(coxeter_length(sp("-2,-1")) == 3);
    CHECK(coxeter_length(sp("-3,-2,-1")) == 6);

    CHECK(neg_count(SignedPermutation::identity(2)) == 0);
    CHECK(neg_count(sp("-2,-1")) == 2);
    CHECK(neg_count(sp("1,-2")) == 1);

    CHECK(absolute_length(SignedPermutation::identity(3)) == 0);
    CHECK(absolute_length(sp("-1,-2")) == 2);
    CHECK(absolute_length(SignedPermutation::generator(2, 1)) == 1);
}

TEST_CASE("coxeter_length agrees with reduced-word length and the inversion formula on W_3") {
    for (const auto& w : all_elements(3)) {
        const auto word = canonical_reduced_word(w);
        CHECK(coxeter_length(w) == static_cast<int>(word.size()));
        // multiply the word back out
        auto prod = SignedPermutation::identity(3);
        for (int i : word) prod = prod.right_multiplied(i);
        CHECK(prod == w);
        // t0 appears neg_count(w) times in any reduced word
        CHECK(static_cast<int>(std::count(word.begin(), word.end(), 0)) == neg_count(w));
    }
}

TEST_CASE("right descents") {
    CHECK(right_descents(SignedPermutation::identity(3)).empty());
    CHECK(right_descents(sp("-1,2")) == std::vector<int>{0});
    CHECK(right_descents(sp("-2,-1")) == std::vector<int>{0});

    // descent criterion == length-drop criterion, exhaustively on W_3
    for (const auto& w : all_elements(3)) {
        std::vector<int> by_length;
        for (int i = 0; i < 3; ++i)
            if (coxeter_length(w.right_multiplied(i)) < coxeter_length(w)) by_length.push_back(i);
        CHECK(right_descents(w) == by_length);
    }
}

TEST_CASE("sorting subwords") {
    CHECK(sort_left({2, 1, 3, 4, 7, 6, 5}) == Word{2, 3, 4, 7});
    CHECK(sort_right({2, 1, 3, 4, 7, 6, 5}) == Word{1, 3, 4, 5});
    CHECK(sort_left({-2, 1, -3, 4, -7, 6, -5}) == Word{-2, 1, 4, 6});
    CHECK(sort_right({-2, 1, -3, 4, -7, 6, -5}) == Word{-2, -3, -7, -5});
    CHECK(sort_left({1, 2, 3}) == Word{1, 2, 3});
    CHECK(sort_right({1, 2, 3}) == Word{1, 2, 3});
}

TEST_CASE("sort_left/sort_right are order-preserving selections, fixed on descent-free words") {
    auto is_subword = [](const Word& sub, const Word& w) {
        size_t i = 0;
        for (int x : w)
            if (i < sub.size() && sub[i] == x) ++i;
        return i == sub.size();
    };
    for (const auto& w : all_elements(3)) {
        const Word word(w.window());
        for (auto f : {sort_left, sort_right}) {
            const Word once = f(word);
            CHECK(is_subword(once, word));
            if (descent_positions(word).empty()) CHECK(once == word);
            if (descent_positions(once).empty()) CHECK(f(once) == once);
        }
    }
}

TEST_CASE("dedupe_first") {
    CHECK(dedupe_first({1, 1, 2, 2}) == Word{1, 2});
    CHECK(dedupe_first({3, 1, 2}) == Word{3, 1, 2});
    CHECK(dedupe_first({-9, -9, -8, -8, 7, -2, -1, -1, 6, 3, 4, 4, 5, 5}) ==
          Word{-9, -8, 7, -2, -1, 6, 3, 4, 5});
}

TEST_CASE("consecutive patterns") {
    CHECK(has_consecutive_pattern({5, 4, 3, 2, 1}, ConsecutivePattern::p321));
    CHECK_FALSE(has_consecutive_pattern({-3, 4, -5, 1, -2}, ConsecutivePattern::p321));
    CHECK(has_consecutive_pattern({-1, -2, 3}, ConsecutivePattern::negneg));
    CHECK_FALSE(has_consecutive_pattern({-2, -1, 3}, ConsecutivePattern::negneg));
}

TEST_CASE("reflections") {
    CHECK(reflections(1) == std::vector<SignedPermutation>{sp("-1")});
    CHECK(reflections(2).size() == 4);
    const auto refl3 = reflections(3);
    CHECK(refl3.size() == 9);
    for (const auto& t : refl3) {
        CHECK(t == t.inverse());
        CHECK(absolute_length(t) == 1);
    }
    CHECK(std::is_sorted(refl3.begin(), refl3.end()));
}

TEST_CASE("psi embedding") {
    CHECK(psi_embed(SignedPermutation::identity(2)).is_identity());
    CHECK(psi_embed(sp("1,-2")) == SetPermutation::from_line({4, 2, 3, 1}));
    CHECK(coxeter_length(psi_embed(sp("-2,-1"))) == 2 * 3 - 2);
}

TEST_CASE("psi is a homomorphism with the stated length identities on W_3") {
    const auto elems = all_elements(3);
    for (const auto& u : elems) {
        CHECK(coxeter_length(psi_embed(u)) == 2 * coxeter_length(u) - neg_count(u));
        // l'_0 = number of negation-stable cycles = 2 l'(u) - l'(psi(u))
        CHECK(absolute_length(psi_embed(u)) >= 2 * absolute_length(u) - u.rank());
    }
    for (const auto& u : elems)
        for (const auto& v : elems)
            CHECK(psi_embed(compose(u, v)) == compose(psi_embed(u), psi_embed(v)));
}

TEST_CASE("absolute length of psi image") {
    // l'(psi(w)) = 2 l'(w) - (number of negation-stable cycles), checked on W_3
    for (const auto& w : all_elements(3)) {
        const int n = w.rank();
        auto idx = [n](int i) { return i > 0 ? n + i - 1 : n + i; };
        std::vector<bool> seen(2 * n, false);
        int stable = 0;
        for (int s = -n; s <= n; ++s) {
            if (s == 0 || seen[idx(s)]) continue;
            std::vector<int> orbit;
            int i = s;
            while (!seen[idx(i)]) {
                seen[idx(i)] = true;
                orbit.push_back(i);
                i = w(i);
            }
            bool closed = true;
            for (int x : orbit)
                if (std::find(orbit.begin(), orbit.end(), -x) == orbit.end()) closed = false;
            stable += closed;
        }
        CHECK(absolute_length(psi_embed(w)) == 2 * absolute_length(w) - stable);
    }
}

TEST_CASE("set permutations") {
    SetPermutation s({1, 3, 5}, {5, 3, 1});
    CHECK(s.is_involution());
    CHECK(coxeter_length(s) == 3);
    CHECK(s.apply(1) == 5);
    CHECK_THROWS_AS(s.apply(2), std::invalid_argument);
    CHECK(compose(s, s).is_identity());

    CHECK(embed_symmetric(SetPermutation::from_line({2, 1, 3})) == sp("2,1,3"));
    CHECK_THROWS_AS(embed_symmetric(s), std::invalid_argument);
}
