#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qshuffle/mould.hpp"
#include "qshuffle/shuffle.hpp"

using namespace qshuffle;

namespace {

ColoredPermutation cp(std::vector<int> sigma, std::vector<int> colors) {
    return ColoredPermutation(std::move(sigma), std::move(colors));
}

RationalMould::Denominator den(std::vector<std::pair<std::vector<int>, int>> forms) {
    RationalMould::Denominator out;
    for (auto& [form, e] : forms) out[form] = e;
    return out;
}

}  // namespace

TEST_CASE("partial-sum fractions") {
    CHECK(f_fraction({1}).denominator() == den({{{1}, 1}}));
    CHECK(f_fraction({1, 2}).denominator() == den({{{1}, 1}, {{1, 2}, 1}}));
    CHECK(f_fraction({2, 1}).denominator() == den({{{2}, 1}, {{1, 2}, 1}}));

    CHECK(z_fraction(cp({1}, {2})).denominator() == den({{{1}, 2}}));
    CHECK(z_fraction(cp({2, 1}, {1, 2})).denominator() == den({{{2}, 1}, {{1, 2}, 2}}));
    CHECK(z_fraction(cp({3, 1, 2}, {1, 1, 1})).equals(f_fraction({3, 1, 2})));
}

TEST_CASE("mu concatenates disjoint variable blocks") {
    const auto left = z_fraction(cp({1}, {1}));
    CHECK(mu(left, left).denominator() == den({{{1}, 1}, {{2}, 1}}));
    CHECK(mu(z_fraction(cp({1}, {2})), left).denominator() == den({{{1}, 2}, {{2}, 1}}));
    CHECK(mu(left, RationalMould::one()).equals(left));
    CHECK(mu(RationalMould::one(), left).equals(left));

    const auto a = z_fraction(cp({1}, {1}));
    const auto b = z_fraction(cp({2, 1}, {1, 2}));
    const auto c = z_fraction(cp({1}, {3}));
    CHECK(mu(mu(a, b), c).equals(mu(a, mu(b, c))));
}

TEST_CASE("classical partial fraction identity") {
    const auto lhs = mu(f_fraction({1}), f_fraction({1}));
    const auto rhs = f_fraction({1, 2}) + f_fraction({2, 1});
    CHECK(lhs.equals(rhs));
    CHECK_FALSE(lhs.equals(f_fraction({1, 2})));
}

TEST_CASE("word encodings in both conventions") {
    CHECK(epsilon_word(cp({1}, {2}), Convention::prefix) == ColoredWord{0, 1});
    CHECK(epsilon_word(cp({1}, {2}), Convention::suffix) == ColoredWord{1, 0});
    CHECK(epsilon_word(cp({2, 1}, {1, 2}), Convention::suffix) == ColoredWord{2, 1, 0});
    CHECK(epsilon_word(cp({2, 1, 3}, {1, 1, 1}), Convention::suffix) == ColoredWord{2, 1, 3});
    CHECK(epsilon_word(cp({2, 1, 3}, {1, 1, 1}), Convention::prefix) == ColoredWord{2, 1, 3});
    CHECK(epsilon_word(cp({1}, {1}), Convention::suffix, 3) == ColoredWord{4});

    for (const auto convention : {Convention::suffix, Convention::prefix})
        for (const auto& sigma : permutations_of(3))
            for (const auto& colors : compositions_of(5, 3)) {
                const auto p = cp(sigma, colors.parts());
                CHECK(decode_epsilon(epsilon_word(p, convention), convention) == p);
            }

    CHECK_THROWS_AS(decode_epsilon({0, 1}, Convention::suffix), std::invalid_argument);
    CHECK_THROWS_AS(decode_epsilon({1, 0}, Convention::prefix), std::invalid_argument);
    CHECK_THROWS_AS(decode_epsilon({1, 1}, Convention::suffix), std::invalid_argument);
}

TEST_CASE("encoding-shuffle product") {
    const auto square = guo_xie_product(cp({1}, {1}), cp({1}, {1}));
    CHECK(square.size() == 2);
    CHECK(square.coefficient(cp({1, 2}, {1, 1})) == 1);
    CHECK(square.coefficient(cp({2, 1}, {1, 1})) == 1);

    const auto mixed = guo_xie_product(cp({1}, {2}), cp({1}, {1}));
    CHECK(mixed.size() == 3);
    CHECK(mixed.coefficient(cp({1, 2}, {2, 1})) == 1);
    CHECK(mixed.coefficient(cp({1, 2}, {1, 2})) == 1);
    CHECK(mixed.coefficient(cp({2, 1}, {1, 2})) == 1);

    CHECK(guo_xie_product(cp({2, 1}, {1, 3}), ColoredPermutation()) ==
          LinearCombination<ColoredPermutation>::term(cp({2, 1}, {1, 3})));
}

TEST_CASE("all-ones colors reduce to the shifted shuffle") {
    for (const auto& sigma : permutations_of(2))
        for (const auto& tau : permutations_of(2)) {
            const auto p = cp(sigma, {1, 1});
            const auto q = cp(tau, {1, 1});
            CHECK(guo_xie_product(p, q) == shifted_shuffle(p, q));
        }
}

TEST_CASE("mould identity for the worked bidegrees") {
    CHECK(verify_mould_identity(cp({1}, {1}), cp({1}, {1})).ok);
    CHECK(verify_mould_identity(cp({1}, {2}), cp({1}, {1})).ok);
    CHECK(verify_mould_identity(cp({1}, {1}), cp({1}, {2})).ok);
    CHECK(verify_mould_identity(cp({2, 1}, {1, 2}), cp({1}, {1})).ok);
}

TEST_CASE("the prefix convention fails the product identity") {
    const auto check = verify_mould_identity(cp({1}, {2}), cp({1}, {1}), Convention::prefix);
    CHECK_FALSE(check.ok);
}

TEST_CASE("colored F product") {
    const auto r = colored_f_product(cp({1}, {1}), cp({1}, {1}));
    CHECK(r.size() == 2);
    CHECK(r.coefficient(cp({1, 2}, {1, 1})) == 1);
    CHECK(r.coefficient(cp({2, 1}, {1, 1})) == 1);
    CHECK(colored_f_product(cp({2, 1}, {3, 4}), ColoredPermutation()) ==
          LinearCombination<ColoredPermutation>::term(cp({2, 1}, {3, 4})));
}

TEST_CASE("colored conversions invert each other") {
    CHECK(colored_f_in_z(cp({1}, {5})) ==
          LinearCombination<ColoredPermutation>::term(cp({1}, {5})));
    for (const auto& sigma : permutations_of(2))
        for (int w = 2; w <= 5; ++w)
            for (const auto& colors : compositions_of(w, 2)) {
                const auto p = cp(sigma, colors.parts());
                LinearCombination<ColoredPermutation> round;
                for (const auto& [f, c] : colored_z_in_f(p))
                    round.add_scaled(colored_f_in_z(f), c);
                CHECK(round == LinearCombination<ColoredPermutation>::term(p));
            }
}

TEST_CASE("colored Z product routes agree") {
    const auto r = colored_z_product(cp({1}, {1}), cp({1}, {1}));
    CHECK(r.size() == 2);
    CHECK(r.coefficient(cp({1, 2}, {1, 1})) == 1);
    CHECK(r.coefficient(cp({2, 1}, {1, 1})) == 1);

    for (int ws = 1; ws <= 2; ++ws)
        for (int wt = 1; wt <= 3; ++wt)
            CHECK(colored_z_product_by_shuffle(cp({1}, {ws}), cp({1}, {wt})) ==
                  colored_z_product_by_f(cp({1}, {ws}), cp({1}, {wt})));

    CHECK(colored_z_product(cp({1}, {1}), cp({1}, {2})) ==
          colored_z_product_by_f(cp({1}, {1}), cp({1}, {2})));
}

TEST_CASE("fractions are injective per bidegree") {
    for (int w = 2; w <= 4; ++w) {
        std::vector<RationalMould> seen;
        for (const auto& sigma : permutations_of(2))
            for (const auto& colors : compositions_of(w, 2)) {
                const auto z = z_fraction(cp(sigma, colors.parts()));
                for (const auto& other : seen) CHECK_FALSE(z.equals(other));
                seen.push_back(z);
            }
    }
}
