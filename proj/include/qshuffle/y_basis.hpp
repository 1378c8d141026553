#pragma once

#include "qshuffle/composition.hpp"
#include "qshuffle/linear_combination.hpp"
#include "qshuffle/matrix.hpp"

#include <map>

namespace qshuffle {

// W-expansions of the recursive shuffle-compatible basis in one degree:
// Y_L = W_L for anti-Lyndon L, and otherwise Y_I is determined by the
// triangular system
//   Y_{L_1} sh ... sh Y_{L_m} = sum_K <K | L_1 sh ... sh L_m> Y_K,
// where L_1 >= ... >= L_m are the anti-Lyndon factors of I, the left
// side is the shuffle of binary words and the right side the shuffle of
// compositions. Solving in descending lexicographic order only ever
// needs already-known Y_K with K > I; the leading multiplicity (product
// of factorials of repeated-factor multiplicities) divides out exactly.
class YBasisTable {
public:
    explicit YBasisTable(int degree);

    int degree() const { return degree_; }

    // Y_I as a combination of W_J, all with l(J) = l(I) and J >= I.
    const LinearCombination<Composition>& expansion(const Composition& I) const;

    const std::map<Composition, LinearCombination<Composition>>& table() const {
        return table_;
    }

private:
    int degree_;
    std::map<Composition, LinearCombination<Composition>> table_;
};

// Entry (I, J) is the coefficient of W_I in Y_J; upper unitriangular with
// integer entries (nonnegative through degree 5, signed from degree 6 on).
TransitionMatrix y_matrix(int n, int k);
TransitionMatrix y_matrix(const YBasisTable& table, int k);

}  // namespace qshuffle
