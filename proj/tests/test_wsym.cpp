#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qshuffle/transition.hpp"
#include "qshuffle/wsym.hpp"

#include <numeric>

using namespace qshuffle;

namespace {

Composition comp(std::vector<int> parts) { return Composition(std::move(parts)); }

}  // namespace

TEST_CASE("X elements by the maxima statistic") {
    const auto x211 = x_element(comp({2, 1, 1}));
    CHECK(x211.size() == 3);
    CHECK(x211.coefficient(SetPartition(4, {{1, 2}, {3}, {4}})) == 1);
    CHECK(x211.coefficient(SetPartition(4, {{2}, {1, 3}, {4}})) == 1);
    CHECK(x211.coefficient(SetPartition(4, {{2}, {3}, {1, 4}})) == 1);

    for (int n = 1; n <= 5; ++n) {
        const auto xn = x_element(comp({n}));
        CHECK(xn.size() == 1);
        std::vector<int> all(static_cast<size_t>(n));
        std::iota(all.begin(), all.end(), 1);
        CHECK(xn.coefficient(SetPartition(n, {all})) == 1);

        const auto ones = x_element(Composition(std::vector<int>(n, 1)));
        CHECK(ones.size() == 1);
        Blocks singleton_blocks;
        for (int i = 1; i <= n; ++i) singleton_blocks.push_back({i});
        CHECK(ones.coefficient(SetPartition(n, singleton_blocks)) == 1);
    }
}

TEST_CASE("every partition lies in exactly one X element") {
    for (int n = 1; n <= 6; ++n) {
        Integer covered = 0;
        for (const auto& J : compositions_of(n)) {
            for (const auto& [pi, c] : x_element(J)) {
                CHECK(stat_C(pi) == J);
                CHECK(c == 1);
            }
            covered += static_cast<long>(x_element(J).size());
        }
        CHECK(covered == bell_number(n));
    }
}

TEST_CASE("coproduct of small elements") {
    const auto single = coproduct(SetPartition(1, {{1}}));
    CHECK(single.size() == 2);
    CHECK(single.coefficient({SetPartition(), SetPartition(1, {{1}})}) == 1);
    CHECK(single.coefficient({SetPartition(1, {{1}}), SetPartition()}) == 1);

    const auto two_blocks = coproduct(SetPartition(3, {{1, 2}, {3}}));
    Rational mass = 0;
    for (const auto& [pair, c] : two_blocks) mass += c;
    CHECK(mass == 4);  // 2^2 ordered splits

    const auto separated = coproduct(SetPartition(2, {{1}, {2}}));
    CHECK(separated.coefficient({SetPartition(1, {{1}}), SetPartition(1, {{1}})}) == 2);
}

TEST_CASE("raw splits keep the original labels") {
    const auto splits = co_splits(SetPartition(4, {{1, 2}, {3}, {4}}));
    CHECK(splits.size() == 8);
    int nonempty = 0;
    for (const auto& [left, right] : splits)
        if (!left.empty() && !right.empty()) ++nonempty;
    CHECK(nonempty == 6);
}

TEST_CASE("coproduct theorem in small degrees") {
    CHECK(verify_theorem_coproduct(comp({1})).ok);
    CHECK(verify_theorem_coproduct(comp({4})).ok);
    CHECK(verify_theorem_coproduct(comp({2, 1, 1})).ok);
    for (int n = 1; n <= 5; ++n)
        for (const auto& J : compositions_of(n)) CHECK(verify_theorem_coproduct(J).ok);
}

TEST_CASE("counting route for c") {
    CHECK(c_by_counting(comp({2, 2}), comp({3, 1})) == 2);
    for (int n = 1; n <= 5; ++n) {
        const Composition ones(std::vector<int>(n, 1));
        CHECK(c_by_counting(ones, ones) == 1);
    }
    CHECK(c_by_counting(comp({2, 1, 3}), comp({4, 1, 1})) ==
          c_entry(comp({2, 1, 3}), comp({4, 1, 1})));
}

TEST_CASE("counting equals the binomial formula through degree 8") {
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto counted = c_matrix_by_counting(n, k);
            const auto formula = c_matrix(n, k);
            CHECK(counted == formula);
        }
}

TEST_CASE("marginals of the joint statistic count") {
    for (int n = 1; n <= 6; ++n) {
        const auto all_partitions = set_partitions(n);
        for (int k = 1; k <= n; ++k) {
            const auto block = c_matrix_by_counting(n, k);
            for (const auto& J : block.index()) {
                Rational column_sum = 0;
                for (const auto& I : block.index()) column_sum += block.at(I, J);
                Integer direct = 0;
                for (const auto& pi : all_partitions)
                    if (stat_C(pi) == J) ++direct;
                CHECK(column_sum == Rational(direct));
            }
            for (const auto& I : block.index()) {
                Rational row_sum = 0;
                for (const auto& J : block.index()) row_sum += block.at(I, J);
                Integer direct = 0;
                for (const auto& pi : all_partitions)
                    if (stat_K(pi) == I) ++direct;
                CHECK(row_sum == Rational(direct));
            }
        }
    }
}
