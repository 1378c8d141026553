#pragma once

#include "qshuffle/composition.hpp"
#include "qshuffle/linear_combination.hpp"
#include "qshuffle/matrix.hpp"
#include "qshuffle/set_partition.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qshuffle {

// Elements of the set-partition Hopf algebra, written on the M basis
// indexed by set partitions.
using WSymElement = LinearCombination<SetPartition>;
using PartitionPair = std::pair<SetPartition, SetPartition>;

// X_J = sum of M_pi over partitions with maxima statistic C(pi) = J.
// The empty composition gives the unit M of the empty partition.
WSymElement x_element(const Composition& J);

// Coproduct of M_pi: split the blocks into an ordered pair of
// complementary subsets; each side is standardized onto an initial
// interval. Cocommutative and coassociative.
LinearCombination<PartitionPair> coproduct(const SetPartition& pi);
LinearCombination<PartitionPair> wsym_coproduct(const WSymElement& e);

// The same splits with the original labels kept (used to compare against
// pair lists of sub-partitions of {1..n}).
std::vector<std::pair<Blocks, Blocks>> co_splits(const SetPartition& pi);

// Checks Delta X_J = sum_{K,L} <W_J | W_K sh W_L> X_K (x) X_L by exact
// comparison; on failure reports the first differing tensor coefficient.
struct TheoremCheck {
    bool ok = true;
    std::string counterexample;
};
TheoremCheck verify_theorem_coproduct(const Composition& J);

// #{pi : K(pi) = I and C(pi) = J}; the combinatorial route to c_IJ.
Integer c_by_counting(const Composition& I, const Composition& J);
TransitionMatrix c_matrix_by_counting(int n, int k);

}  // namespace qshuffle
