#include "qshuffle/colored_permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qshuffle {

ColoredPermutation::ColoredPermutation(std::vector<int> sigma, std::vector<int> colors)
    : sigma_(std::move(sigma)), colors_(std::move(colors)) {
    if (sigma_.size() != colors_.size())
        throw std::invalid_argument("colored permutation needs one color per letter");
    std::vector<int> sorted = sigma_;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 1)
            throw std::invalid_argument("sigma is not a permutation of {1..n}");
    for (int c : colors_)
        if (c < 1) throw std::invalid_argument("colors must be positive");
}

int ColoredPermutation::weight() const {
    return std::accumulate(colors_.begin(), colors_.end(), 0);
}

std::string ColoredPermutation::str() const {
    std::string out;
    for (int s : sigma_) out += std::to_string(s);
    out += ';';
    for (size_t i = 0; i < colors_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(colors_[i]);
    }
    return out;
}

std::vector<std::vector<int>> permutations_of(int n) {
    std::vector<int> id(static_cast<size_t>(std::max(n, 0)));
    std::iota(id.begin(), id.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(id);
    } while (std::next_permutation(id.begin(), id.end()));
    return out;
}

}  // namespace qshuffle
