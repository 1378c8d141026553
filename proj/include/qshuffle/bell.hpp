#pragma once

#include "qshuffle/composition.hpp"
#include "qshuffle/linear_combination.hpp"

namespace qshuffle {

// Coefficients beta_I of Y^I in the noncommutative Bell polynomial B_n,
// built by the recursion B_{n+1} = sum_k binom(n,k) B_{n-k} Y_{k+1} with
// B_0 = 1. B_n also equals the row-sum vector of the C blocks.
LinearCombination<Composition> bell_polynomial(int n);

// Closed form for the same coefficient:
// prod_{s=2}^k binom(i_1+...+i_s - 1, i_1+...+i_{s-1}).
Integer bell_coefficient_closed(const Composition& I);

}  // namespace qshuffle
