#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qshuffle/shuffle.hpp"

#include <numeric>
#include <random>

using namespace qshuffle;

namespace {

Composition comp(std::vector<int> parts) { return Composition(std::move(parts)); }
BinaryWord bw(const char* s) { return BinaryWord::parse(s); }

BinaryWord random_word(std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> bit(0, 1);
    std::vector<uint8_t> bits;
    for (int i = len(rng); i > 0; --i) bits.push_back(static_cast<uint8_t>(bit(rng)));
    return BinaryWord(bits);
}

LinearCombination<BinaryWord> shuffle_lc(const LinearCombination<BinaryWord>& x,
                                         const LinearCombination<BinaryWord>& y) {
    return bilinear_extend([](const BinaryWord& u, const BinaryWord& v) { return shuffle(u, v); },
                           x, y);
}

Rational total_mass(const LinearCombination<BinaryWord>& lc) {
    Rational sum = 0;
    for (const auto& [w, c] : lc) sum += c;
    return sum;
}

}  // namespace

TEST_CASE("shuffle of binary words") {
    auto r = shuffle(bw("b"), bw("ab"));
    CHECK(r.size() == 2);
    CHECK(r.coefficient(bw("bab")) == 1);
    CHECK(r.coefficient(bw("abb")) == 2);

    CHECK(shuffle(BinaryWord(), bw("abab")) ==
          LinearCombination<BinaryWord>::term(bw("abab")));

    // |u|+|v| choose |u| interleavings in total
    for (const char* u : {"a", "ab", "babb"})
        for (const char* v : {"b", "ba", "aab"}) {
            const auto lc = shuffle(bw(u), bw(v));
            CHECK(total_mass(lc) ==
                  Rational(binomial(static_cast<long>(bw(u).size() + bw(v).size()),
                                    static_cast<long>(bw(u).size()))));
        }
}

TEST_CASE("shuffle of compositions as words over the positive integers") {
    const auto r = shuffle(comp({1}), comp({2, 1}));
    CHECK(r.size() == 2);
    CHECK(r.coefficient(comp({1, 2, 1})) == 1);
    CHECK(r.coefficient(comp({2, 1, 1})) == 2);
}

TEST_CASE("quasi-shuffle worked product") {
    const auto r = quasi_shuffle(comp({2, 1}), comp({1, 2}));
    LinearCombination<Composition> expected;
    expected.add_term(comp({2, 1, 1, 2}), 2);
    expected.add_term(comp({2, 1, 2, 1}), 1);
    expected.add_term(comp({2, 1, 3}), 1);
    expected.add_term(comp({2, 2, 2}), 1);
    expected.add_term(comp({1, 2, 1, 2}), 1);
    expected.add_term(comp({1, 2, 2, 1}), 2);
    expected.add_term(comp({1, 2, 3}), 1);
    expected.add_term(comp({1, 4, 1}), 1);
    expected.add_term(comp({3, 1, 2}), 1);
    expected.add_term(comp({3, 2, 1}), 1);
    expected.add_term(comp({3, 3}), 1);
    CHECK(r == expected);
}

TEST_CASE("quasi-shuffle unit and one-step recursion") {
    CHECK(quasi_shuffle(comp({1}), Composition()) ==
          LinearCombination<Composition>::term(comp({1})));
    const auto r = quasi_shuffle(comp({1}), comp({1}));
    CHECK(r.coefficient(comp({1, 1})) == 2);
    CHECK(r.coefficient(comp({2})) == 1);
    CHECK(r.size() == 2);
}

TEST_CASE("quasi-shuffle degrees, lengths and shuffle restriction") {
    for (const auto& I : compositions_of(3))
        for (const auto& J : compositions_of(4)) {
            const auto q = quasi_shuffle(I, J);
            LinearCombination<Composition> longest;
            for (const auto& [K, c] : q) {
                CHECK(K.degree() == 7);
                CHECK(K.length() >= std::max(I.length(), J.length()));
                CHECK(K.length() <= I.length() + J.length());
                if (K.length() == I.length() + J.length()) longest.add_term(K, c);
            }
            CHECK(longest == shuffle(I, J));
        }
}

TEST_CASE("unshuffle basics") {
    const auto r = unshuffle(bw("bb"));
    CHECK(r.coefficient({BinaryWord(), bw("bb")}) == 1);
    CHECK(r.coefficient({bw("b"), bw("b")}) == 2);
    CHECK(r.coefficient({bw("bb"), BinaryWord()}) == 1);

    CHECK(unshuffle(bw("bab")).coefficient({bw("b"), bw("ab")}) == 1);
    CHECK(unshuffle(bw("abb")).coefficient({bw("b"), bw("ab")}) == 2);

    const auto e = unshuffle(BinaryWord());
    CHECK(e.size() == 1);
    CHECK(e.coefficient({BinaryWord(), BinaryWord()}) == 1);
}

TEST_CASE("unshuffle is dual to shuffle") {
    for (int n = 0; n <= 7; ++n)
        for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
            std::vector<uint8_t> bits;
            for (int i = 0; i < n; ++i) bits.push_back((mask >> i) & 1ul);
            const BinaryWord w(bits);
            for (const auto& [pair, coeff] : unshuffle(w))
                CHECK(shuffle(pair.first, pair.second).coefficient(w) == coeff);
        }
}

TEST_CASE("shuffle is commutative and associative") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const auto u = random_word(rng, 5), v = random_word(rng, 5), w = random_word(rng, 4);
        CHECK(shuffle(u, v) == shuffle(v, u));
        const auto uv_w = shuffle_lc(shuffle(u, v), LinearCombination<BinaryWord>::term(w));
        const auto u_vw = shuffle_lc(LinearCombination<BinaryWord>::term(u), shuffle(v, w));
        CHECK(uv_w == u_vw);
    }
}

TEST_CASE("quasi-shuffle is commutative and associative") {
    const auto rule = [](const Composition& a, const Composition& b) {
        return quasi_shuffle(a, b);
    };
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> deg(0, 3);
    auto random_comp = [&]() {
        int n = deg(rng);
        const auto all = compositions_of(n);
        std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
        return all[pick(rng)];
    };
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_comp(), b = random_comp(), c = random_comp();
        CHECK(quasi_shuffle(a, b) == quasi_shuffle(b, a));
        const auto ab_c =
            bilinear_extend(rule, quasi_shuffle(a, b), LinearCombination<Composition>::term(c));
        const auto a_bc =
            bilinear_extend(rule, LinearCombination<Composition>::term(a), quasi_shuffle(b, c));
        CHECK(ab_c == a_bc);
    }
}

TEST_CASE("shuffle coefficients are reversal-equivariant") {
    for (const auto& I : compositions_of(3))
        for (const auto& J : compositions_of(3)) {
            const auto forward = shuffle(I, J);
            const auto backward = shuffle(I.reversed(), J.reversed());
            for (const auto& [K, coeff] : forward)
                CHECK(backward.coefficient(K.reversed()) == coeff);
        }
}

TEST_CASE("shifted shuffle of colored permutations") {
    const ColoredPermutation p({1}, {3});
    const ColoredPermutation q({1}, {7});
    const auto r = shifted_shuffle(p, q);
    CHECK(r.size() == 2);
    CHECK(r.coefficient(ColoredPermutation({1, 2}, {3, 7})) == 1);
    CHECK(r.coefficient(ColoredPermutation({2, 1}, {7, 3})) == 1);

    const ColoredPermutation two({1, 2}, {4, 5});
    CHECK(shifted_shuffle(two, ColoredPermutation()) ==
          LinearCombination<ColoredPermutation>::term(two));

    // brute force: every term keeps sigma an interleaving of (1) and (2,3)
    const auto mixed = shifted_shuffle(ColoredPermutation({1}, {9}), two);
    CHECK(mixed.size() == 3);
    for (const auto& [cp, coeff] : mixed) {
        CHECK(coeff == 1);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < cp.size(); ++i) pairs.push_back({cp.sigma()[i], cp.colors()[i]});
        std::vector<std::pair<int, int>> first, second;
        for (const auto& pr : pairs)
            (pr.first == 1 ? first : second).push_back(pr);
        CHECK(first == std::vector<std::pair<int, int>>{{1, 9}});
        CHECK(second == std::vector<std::pair<int, int>>{{2, 4}, {3, 5}});
    }

    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) {
            std::vector<int> id_n(n), id_m(m), ones_n(n, 1), ones_m(m, 1);
            std::iota(id_n.begin(), id_n.end(), 1);
            std::iota(id_m.begin(), id_m.end(), 1);
            const auto lc = shifted_shuffle(ColoredPermutation(id_n, ones_n),
                                            ColoredPermutation(id_m, ones_m));
            CHECK(Integer(static_cast<long>(lc.size())) == binomial(n + m, n));
        }
}
