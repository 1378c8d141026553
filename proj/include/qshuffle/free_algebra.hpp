#pragma once

#include "qshuffle/composition.hpp"
#include "qshuffle/linear_combination.hpp"

#include <utility>
#include <vector>

namespace qshuffle {

// Words over {a} + {b_i : i >= 1}; letter 0 is a, letter i >= 1 is b_i.
// The one-letter-b case uses color 1 throughout.
using FreeWord = std::vector<int>;
using FreeAlgebraElement = LinearCombination<FreeWord>;

FreeWord concat(const FreeWord& u, const FreeWord& v);
FreeAlgebraElement concat_product(const FreeAlgebraElement& x, const FreeAlgebraElement& y);

// ad_a^(n-1) b_color, expanded: sum_k (-1)^k binom(n-1,k) a^(n-1-k) b a^k.
FreeAlgebraElement ad_word(int n, int color = 1);

// ad_word(n) / (n-1)!.
FreeAlgebraElement psi_word(int n);

// Y^I = Y_{i_1} ... Y_{i_r} with Y_m = ad_word(m).
FreeAlgebraElement y_monomial(const Composition& I);

// sum_{k=0}^n binom(n,k) (-1)^k (a+b)^(n-k) a^k; equals n! S_n.
FreeAlgebraElement s_word(int n);

// L(w) = aw - wa + bw for the operator L = ad_a + b, i.e. (a+b)w - wa.
FreeAlgebraElement l_apply(const FreeAlgebraElement& x);
// L^n applied to the empty word.
FreeAlgebraElement l_power(int n);

// Kills words ending in a; fixes everything else (including the unit).
FreeAlgebraElement project_p(const FreeAlgebraElement& x);

// (p (x) p) o Delta with all letters primitive.
LinearCombination<std::pair<FreeWord, FreeWord>> delta_prime(const FreeAlgebraElement& x);

// Reads one-color words ending in b as W_J indices; rejects anything else
// in the support.
LinearCombination<Composition> word_compositions(const FreeAlgebraElement& x);

}  // namespace qshuffle
