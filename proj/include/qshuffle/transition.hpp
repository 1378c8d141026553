#pragma once

#include "qshuffle/composition.hpp"
#include "qshuffle/linear_combination.hpp"
#include "qshuffle/matrix.hpp"

namespace qshuffle {

// c_IJ = prod_s binom(j_1+...+j_s - (i_1+...+i_{s-1}) - 1, i_s - 1),
// zero unless |I| = |J| and l(I) = l(J). Counts the set partitions with
// size statistic I and maxima statistic J.
Integer c_entry(const Composition& I, const Composition& J);

// Entry (I, J) is the coefficient of V_I in X_J; lower unitriangular.
TransitionMatrix c_matrix(int n, int k);

// Column J of the C block read off the expansion of
// prod_s (x_s + ... + x_k)^(j_s - 1) in the monomials prod_s x_s^(i_s-1).
LinearCombination<Composition> column_expansion(const Composition& J);
TransitionMatrix c_matrix_by_expansion(int n, int k);

// Entry (I, J) of D is the coefficient of U_I in Z_J; D = transpose(C^-1),
// upper unitriangular with integer entries. The three constructions below
// must agree; d_matrix computes all of them and fails hard on mismatch.
TransitionMatrix d_matrix_by_inversion(int n, int k);
// Row I read off the expansion of prod_s (y_s - y_{s+1})^(i_s - 1) with
// y_{k+1} = 0 in the monomials prod_s y_s^(j_s - 1).
TransitionMatrix d_matrix_by_generating_function(int n, int k);
// Row I read off the free-algebra projection p(Y^I) = sum_J d_IJ W_J.
TransitionMatrix d_matrix_by_projection(int n, int k);
TransitionMatrix d_matrix(int n, int k);

// Process-wide caches (built once per block, internally synchronized).
const TransitionMatrix& cached_c_matrix(int n, int k);
const TransitionMatrix& cached_d_matrix(int n, int k);

// Z_I Z_J expanded in the Z basis: binary shuffle of W_I and W_J.
LinearCombination<Composition> z_product(const Composition& I, const Composition& J);

// U_I U_J expanded in the U basis: shuffle of compositions.
LinearCombination<Composition> u_product(const Composition& I, const Composition& J);

// U_I = sum_J c_IJ Z_J.
LinearCombination<Composition> u_to_z(const Composition& I);
// Z_J = sum_I d_IJ U_I.
LinearCombination<Composition> z_to_u(const Composition& J);

// The same product computed through the U side; must match z_product.
LinearCombination<Composition> z_product_via_u(const Composition& I, const Composition& J);

}  // namespace qshuffle
