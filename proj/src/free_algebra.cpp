#include "qshuffle/free_algebra.hpp"

#include "qshuffle/binary_word.hpp"
#include "qshuffle/shuffle.hpp"

#include <stdexcept>

namespace qshuffle {

FreeWord concat(const FreeWord& u, const FreeWord& v) {
    FreeWord out = u;
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

FreeAlgebraElement concat_product(const FreeAlgebraElement& x, const FreeAlgebraElement& y) {
    FreeAlgebraElement out;
    for (const auto& [u, cu] : x)
        for (const auto& [v, cv] : y) out.add_term(concat(u, v), cu * cv);
    return out;
}

FreeAlgebraElement ad_word(int n, int color) {
    if (n < 1) throw std::invalid_argument("ad_word needs n >= 1");
    if (color < 1) throw std::invalid_argument("colors are positive");
    FreeAlgebraElement acc = FreeAlgebraElement::term(FreeWord{color});
    const FreeAlgebraElement a = FreeAlgebraElement::term(FreeWord{0});
    for (int i = 1; i < n; ++i)
        acc = concat_product(a, acc) - concat_product(acc, a);
    return acc;
}

FreeAlgebraElement psi_word(int n) {
    FreeAlgebraElement out = ad_word(n);
    out *= Rational(1) / Rational(factorial(n - 1));
    return out;
}

FreeAlgebraElement y_monomial(const Composition& I) {
    FreeAlgebraElement acc = FreeAlgebraElement::term(FreeWord{});
    for (int part : I.parts()) acc = concat_product(acc, ad_word(part));
    return acc;
}

FreeAlgebraElement s_word(int n) {
    if (n < 0) throw std::invalid_argument("s_word needs n >= 0");
    FreeAlgebraElement out;
    for (int k = 0; k <= n; ++k) {
        const Rational coeff = Rational(binomial(n, k)) * (k % 2 ? -1 : 1);
        // (a+b)^(n-k) expands to every {a,b}-word of that length.
        const int m = n - k;
        for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
            FreeWord w;
            w.reserve(static_cast<size_t>(n));
            for (int i = 0; i < m; ++i) w.push_back((mask >> i) & 1ul ? 1 : 0);
            w.insert(w.end(), static_cast<size_t>(k), 0);
            out.add_term(w, coeff);
        }
    }
    return out;
}

FreeAlgebraElement l_apply(const FreeAlgebraElement& x) {
    // L = ad_a + b acting as (a+b)w - wa.
    FreeAlgebraElement out;
    for (const auto& [w, c] : x) {
        FreeWord aw;
        aw.reserve(w.size() + 1);
        aw.push_back(0);
        aw.insert(aw.end(), w.begin(), w.end());
        out.add_term(aw, c);

        FreeWord wa = w;
        wa.push_back(0);
        out.add_term(wa, -c);

        FreeWord bw;
        bw.reserve(w.size() + 1);
        bw.push_back(1);
        bw.insert(bw.end(), w.begin(), w.end());
        out.add_term(bw, c);
    }
    return out;
}

FreeAlgebraElement l_power(int n) {
    FreeAlgebraElement acc = FreeAlgebraElement::term(FreeWord{});
    for (int i = 0; i < n; ++i) acc = l_apply(acc);
    return acc;
}

FreeAlgebraElement project_p(const FreeAlgebraElement& x) {
    FreeAlgebraElement out;
    for (const auto& [w, c] : x)
        if (w.empty() || w.back() != 0) out.add_term(w, c);
    return out;
}

LinearCombination<std::pair<FreeWord, FreeWord>> delta_prime(const FreeAlgebraElement& x) {
    LinearCombination<std::pair<FreeWord, FreeWord>> out;
    for (const auto& [w, c] : x)
        for (const auto& [pair, mult] : unshuffle_word(w)) {
            const auto& [left, right] = pair;
            if (!left.empty() && left.back() == 0) continue;
            if (!right.empty() && right.back() == 0) continue;
            out.add_term(pair, c * mult);
        }
    return out;
}

LinearCombination<Composition> word_compositions(const FreeAlgebraElement& x) {
    LinearCombination<Composition> out;
    for (const auto& [w, c] : x) {
        std::vector<uint8_t> bits;
        bits.reserve(w.size());
        for (int letter : w) {
            if (letter != 0 && letter != 1)
                throw std::invalid_argument("word uses a color other than b_1");
            bits.push_back(static_cast<uint8_t>(letter));
        }
        out.add_term(composition_of_word(BinaryWord(std::move(bits))), c);
    }
    return out;
}

}  // namespace qshuffle
