#pragma once

#include "qshuffle/binary_word.hpp"
#include "qshuffle/colored_permutation.hpp"
#include "qshuffle/composition.hpp"
#include "qshuffle/linear_combination.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qshuffle {

// Shuffle of plain sequences over any ordered letter type, memoized on
// word pairs so repeated subproblems inside one computation are shared.
// Instances are not thread-safe; use one per computation.
template <class L>
class Shuffler {
public:
    using Word = std::vector<L>;
    using Result = LinearCombination<Word>;

    const Result& operator()(const Word& u, const Word& v) {
        const bool flip = v < u;  // the shuffle is commutative
        auto key = flip ? std::make_pair(v, u) : std::make_pair(u, v);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        Result out;
        if (key.first.empty()) {
            out.add_term(key.second, 1);
        } else if (key.second.empty()) {
            out.add_term(key.first, 1);
        } else {
            out = prepend(key.first.front(), (*this)(tail(key.first), key.second));
            out += prepend(key.second.front(), (*this)(key.first, tail(key.second)));
        }
        return memo_.emplace(std::move(key), std::move(out)).first->second;
    }

private:
    static Word tail(const Word& w) { return Word(w.begin() + 1, w.end()); }

    static Result prepend(const L& letter, const Result& lc) {
        Result out;
        for (const auto& [word, coeff] : lc) {
            Word extended;
            extended.reserve(word.size() + 1);
            extended.push_back(letter);
            extended.insert(extended.end(), word.begin(), word.end());
            out.add_term(std::move(extended), coeff);
        }
        return out;
    }

    std::map<std::pair<Word, Word>, Result> memo_;
};

// Sum over all interleavings of u and v, with multiplicities; the total
// coefficient mass is binomial(|u|+|v|, |u|).
template <class L>
LinearCombination<std::vector<L>> shuffle_words(const std::vector<L>& u,
                                                const std::vector<L>& v) {
    Shuffler<L> sh;
    return sh(u, v);
}

// Coproduct dual to the shuffle: sum over all complementary subsequence
// pairs of w (2^|w| terms before collection).
template <class L>
LinearCombination<std::pair<std::vector<L>, std::vector<L>>> unshuffle_word(
    const std::vector<L>& w) {
    if (w.size() > 30) throw std::invalid_argument("unshuffle word too long");
    LinearCombination<std::pair<std::vector<L>, std::vector<L>>> out;
    const unsigned long count = 1ul << w.size();
    for (unsigned long mask = 0; mask < count; ++mask) {
        std::vector<L> left, right;
        for (size_t i = 0; i < w.size(); ++i)
            ((mask >> i) & 1ul ? left : right).push_back(w[i]);
        out.add_term({std::move(left), std::move(right)}, 1);
    }
    return out;
}

// --- Binary-word instances -------------------------------------------------

LinearCombination<BinaryWord> inline shuffle(const BinaryWord& u, const BinaryWord& v) {
    LinearCombination<BinaryWord> out;
    for (const auto& [bits, coeff] : shuffle_words(u.bits(), v.bits()))
        out.add_term(BinaryWord(bits), coeff);
    return out;
}

inline LinearCombination<std::pair<BinaryWord, BinaryWord>> unshuffle(const BinaryWord& w) {
    LinearCombination<std::pair<BinaryWord, BinaryWord>> out;
    for (const auto& [pair, coeff] : unshuffle_word(w.bits()))
        out.add_term({BinaryWord(pair.first), BinaryWord(pair.second)}, coeff);
    return out;
}

// --- Compositions as words over the positive integers ----------------------

inline LinearCombination<Composition> shuffle(const Composition& I, const Composition& J) {
    LinearCombination<Composition> out;
    for (const auto& [parts, coeff] : shuffle_words(I.parts(), J.parts()))
        out.add_term(Composition(parts), coeff);
    return out;
}

// Quasi-shuffle (stuffle): au # bv = a(u # bv) + b(au # v) + (a+b)(u # v).
LinearCombination<Composition> quasi_shuffle(const Composition& I, const Composition& J);

// --- Shifted shuffle of colored permutations -------------------------------

// Letters of the right factor are shifted by the size of the left one and
// the colored letters are shuffled; multiplicity-free since all letters
// are distinct.
LinearCombination<ColoredPermutation> shifted_shuffle(const ColoredPermutation& p,
                                                      const ColoredPermutation& q);

}  // namespace qshuffle
