#include "qshuffle/shuffle.hpp"

namespace qshuffle {

namespace {

using Parts = std::vector<int>;

LinearCombination<Parts> prepend_part(int part, const LinearCombination<Parts>& lc) {
    LinearCombination<Parts> out;
    for (const auto& [word, coeff] : lc) {
        Parts extended;
        extended.reserve(word.size() + 1);
        extended.push_back(part);
        extended.insert(extended.end(), word.begin(), word.end());
        out.add_term(std::move(extended), coeff);
    }
    return out;
}

LinearCombination<Parts> quasi_shuffle_rec(
    const Parts& u, const Parts& v,
    std::map<std::pair<Parts, Parts>, LinearCombination<Parts>>& memo) {
    const bool flip = v < u;
    auto key = flip ? std::make_pair(v, u) : std::make_pair(u, v);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    LinearCombination<Parts> out;
    if (key.first.empty()) {
        out.add_term(key.second, 1);
    } else if (key.second.empty()) {
        out.add_term(key.first, 1);
    } else {
        Parts ut(key.first.begin() + 1, key.first.end());
        Parts vt(key.second.begin() + 1, key.second.end());
        out = prepend_part(key.first.front(), quasi_shuffle_rec(ut, key.second, memo));
        out += prepend_part(key.second.front(), quasi_shuffle_rec(key.first, vt, memo));
        out += prepend_part(key.first.front() + key.second.front(),
                            quasi_shuffle_rec(ut, vt, memo));
    }
    memo.emplace(std::move(key), out);
    return out;
}

}  // namespace

LinearCombination<Composition> quasi_shuffle(const Composition& I, const Composition& J) {
    std::map<std::pair<Parts, Parts>, LinearCombination<Parts>> memo;
    LinearCombination<Composition> out;
    for (const auto& [parts, coeff] : quasi_shuffle_rec(I.parts(), J.parts(), memo))
        out.add_term(Composition(parts), coeff);
    return out;
}

LinearCombination<ColoredPermutation> shifted_shuffle(const ColoredPermutation& p,
                                                      const ColoredPermutation& q) {
    using Colored = std::pair<int, int>;  // (letter, color)
    std::vector<Colored> left, right;
    for (int i = 0; i < p.size(); ++i) left.push_back({p.sigma()[i], p.colors()[i]});
    for (int i = 0; i < q.size(); ++i) right.push_back({q.sigma()[i] + p.size(), q.colors()[i]});

    LinearCombination<ColoredPermutation> out;
    for (const auto& [word, coeff] : shuffle_words(left, right)) {
        std::vector<int> sigma, colors;
        sigma.reserve(word.size());
        colors.reserve(word.size());
        for (const auto& [letter, color] : word) {
            sigma.push_back(letter);
            colors.push_back(color);
        }
        out.add_term(ColoredPermutation(std::move(sigma), std::move(colors)), coeff);
    }
    return out;
}

}  // namespace qshuffle
