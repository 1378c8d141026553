#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qshuffle/linear_combination.hpp"
#include "qshuffle/matrix.hpp"
#include "qshuffle/polynomial.hpp"
#include "qshuffle/shuffle.hpp"
#include "qshuffle/transition.hpp"

#include <random>

using namespace qshuffle;

namespace {

Composition comp(std::vector<int> parts) { return Composition(std::move(parts)); }

using LC = LinearCombination<std::string>;

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return rational(num(rng), den(rng));
}

LC random_lc(std::mt19937& rng) {
    static const std::vector<std::string> keys = {"x", "y", "z", "w"};
    LC out;
    std::uniform_int_distribution<size_t> pick(0, keys.size() - 1);
    std::uniform_int_distribution<int> count(0, 4);
    for (int t = count(rng); t > 0; --t) out.add_term(keys[pick(rng)], random_rational(rng));
    return out;
}

TransitionMatrix from_rows(std::vector<Composition> index,
                           std::vector<std::vector<long>> rows) {
    TransitionMatrix m(std::move(index));
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

}  // namespace

TEST_CASE("rational helpers") {
    CHECK(rational(2, 4) == rational(1, 2));
    CHECK(to_string(rational(-3, 6)) == "-1/2");
    CHECK(is_integer(rational(8, 4)));
    CHECK(is_zero(rational(0, 5)));
    CHECK(rational_from_string("-7/21") == rational(-1, 3));
}

TEST_CASE("combinatorial number oracles") {
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(factorial(6) == 720);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(6, 3) == 90);
    CHECK(stirling2(8, 4) == 1701);
    CHECK(bell_number(3) == 5);
    CHECK(bell_number(8) == 4140);
}

TEST_CASE("linear combinations normalize") {
    LC a = LC::term("x", 2);
    a.add_term("x", -2);
    CHECK(a.is_zero());

    LC b = LC::term("x", 2) + LC::term("y", 4);
    b *= rational(1, 2);
    CHECK(b.coefficient("x") == 1);
    CHECK(b.coefficient("y") == 2);
    CHECK(b.size() == 2);
}

TEST_CASE("bilinear extension of the shuffle rule on single terms") {
    const auto rule = [](const Composition& I, const Composition& J) { return shuffle(I, J); };
    const auto lhs = bilinear_extend(rule, LinearCombination<Composition>::term(comp({1})),
                                     LinearCombination<Composition>::term(comp({2, 1})));
    CHECK(lhs == shuffle(comp({1}), comp({2, 1})));
}

TEST_CASE("linear combination arithmetic properties") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        const LC a = random_lc(rng), b = random_lc(rng), c = random_lc(rng);
        const Rational s = random_rational(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a + b) * s == a * s + b * s);
        CHECK(a - a == LC());
    }
}

TEST_CASE("exact inversion of small matrices") {
    const std::vector<Composition> idx2 = {comp({2}), comp({1, 1})};
    const auto m = from_rows(idx2, {{1, 0}, {1, 1}});
    const auto inv = m.inverse();
    CHECK(inv == from_rows(idx2, {{1, 0}, {-1, 1}}));
    CHECK((m * inv).is_identity());

    const std::vector<Composition> idx3 = {comp({3, 1}), comp({2, 2}), comp({1, 3})};
    const auto t = from_rows(idx3, {{1, 0, 0}, {2, 1, 0}, {1, 1, 1}});
    CHECK(t.inverse() == from_rows(idx3, {{1, 0, 0}, {-2, 1, 0}, {1, -1, 1}}));

    const auto id = TransitionMatrix::identity(idx3);
    CHECK(id.inverse() == id);

    CHECK_THROWS_AS(from_rows(idx2, {{1, 1}, {1, 1}}).inverse(), SingularMatrixError);
}

TEST_CASE("C blocks are lower unitriangular and invert exactly") {
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto c = c_matrix(n, k);
            CHECK(c.is_lower_unitriangular());
            const auto inv = c.inverse();
            CHECK((c * inv).is_identity());
            CHECK((inv * c).is_identity());
        }
}

TEST_CASE("sparse polynomial arithmetic") {
    const auto x1 = SparsePolynomial::variable(2, 1);
    const auto x2 = SparsePolynomial::variable(2, 2);
    const auto sum = SparsePolynomial::linear_form(2, {1, 2});
    CHECK(sum == x1 + x2);

    const auto square = sum.pow(2);
    CHECK(square.coefficient({2, 0}) == 1);
    CHECK(square.coefficient({1, 1}) == 2);
    CHECK(square.coefficient({0, 2}) == 1);

    CHECK((x1 - x1).is_zero());
    CHECK((x1 * x2).coefficient({1, 1}) == 1);
    CHECK(x1.embedded(3, 1) == SparsePolynomial::variable(3, 2));
    CHECK(sum.pow(0) == SparsePolynomial::constant(2, 1));
}
