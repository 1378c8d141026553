#pragma once

#include <compare>
#include <string>
#include <vector>

namespace qshuffle {

// Permutation of {1..n} carrying one positive color (exponent) per
// position; bidegree (n, |colors|).
class ColoredPermutation {
public:
    ColoredPermutation() = default;
    ColoredPermutation(std::vector<int> sigma, std::vector<int> colors);

    int size() const { return static_cast<int>(sigma_.size()); }
    int weight() const;
    std::pair<int, int> bidegree() const { return {size(), weight()}; }

    const std::vector<int>& sigma() const { return sigma_; }
    const std::vector<int>& colors() const { return colors_; }

    // "21;1,2" (one digit per sigma letter; fine at desk scale n <= 9).
    std::string str() const;

    auto operator<=>(const ColoredPermutation&) const = default;
    bool operator==(const ColoredPermutation&) const = default;

private:
    std::vector<int> sigma_;
    std::vector<int> colors_;
};

// All permutations of {1..n} in lexicographic order.
std::vector<std::vector<int>> permutations_of(int n);

}  // namespace qshuffle
