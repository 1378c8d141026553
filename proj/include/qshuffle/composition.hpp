#pragma once

#include <compare>
#include <string>
#include <vector>

namespace qshuffle {

// A composition: finite sequence of positive parts. The empty composition
// is the unit in degree 0.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int degree() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    Composition reversed() const;
    Composition concat(const Composition& tail) const;
    Composition appended(int part) const;

    // "2,1,3"; the empty composition renders as "".
    std::string str() const;

    // Natural (ascending) lexicographic order on part sequences.
    auto operator<=>(const Composition& other) const = default;
    bool operator==(const Composition& other) const = default;

private:
    std::vector<int> parts_;
};

// All compositions of n with exactly k parts, in descending lexicographic
// order; empty when k is impossible. compositions_of(0, 0) is {()}.
std::vector<Composition> compositions_of(int n, int k);

// All compositions of n in reverse length-lexicographic order: blocks of
// equal length in ascending length order, descending lexicographic inside
// each block (e.g. 4, 31, 22, 13, 211, 121, 112, 1111).
std::vector<Composition> compositions_of(int n);

// All compositions of n sorted by plain descending lexicographic order on
// part sequences, lengths mixed (the processing order of the triangular
// basis construction).
std::vector<Composition> compositions_desc_lex(int n);

// S = {s_1 < ... < s_{k-1}} inside {1..n-1} maps to the composition
// (s_1, s_2-s_1, ..., n-s_{k-1}) of n whose descent set is S.
Composition subset_to_composition(const std::vector<int>& subset, int n);

// Inverse of the above: the proper partial sums (descents) of I.
std::vector<int> composition_to_subset(const Composition& I);

}  // namespace qshuffle
