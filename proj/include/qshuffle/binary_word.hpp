#pragma once

#include "qshuffle/composition.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qshuffle {

// Word over the two-letter alphabet {a, b}, a < b, stored as bits
// (a = 0, b = 1) so that the default vector comparison is the
// lexicographic order on letters.
class BinaryWord {
public:
    BinaryWord() = default;
    explicit BinaryWord(std::vector<uint8_t> bits);

    // Accepts only 'a' and 'b'.
    static BinaryWord parse(std::string_view text);

    const std::vector<uint8_t>& bits() const { return bits_; }
    size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    uint8_t operator[](size_t i) const { return bits_[i]; }
    bool ends_with_b() const { return !bits_.empty() && bits_.back() == 1; }

    BinaryWord concat(const BinaryWord& tail) const;
    BinaryWord reversed() const;
    std::string str() const;

    auto operator<=>(const BinaryWord& other) const = default;
    bool operator==(const BinaryWord& other) const = default;

private:
    std::vector<uint8_t> bits_;
};

// W_I = a^(i1-1) b a^(i2-1) b ... a^(ir-1) b; a bijection between
// compositions and words ending in b (the empty word for the unit).
BinaryWord word_of_composition(const Composition& I);

// Inverse of word_of_composition; rejects words ending in a.
Composition composition_of_word(const BinaryWord& w);

// Strictly smaller than every proper rotation.
bool is_lyndon(const BinaryWord& w);

// I is anti-Lyndon iff W_I is a Lyndon word.
bool is_anti_lyndon(const Composition& I);

// All Lyndon words over {a,b} of the given length, lexicographic order
// (Duval's generation algorithm).
std::vector<BinaryWord> lyndon_words(int length);

// Chen-Fox-Lyndon factorization: the unique decomposition into a weakly
// decreasing product of Lyndon words (Duval's algorithm).
std::vector<BinaryWord> lyndon_factorization(const BinaryWord& w);

// The anti-Lyndon compositions L_1 >= ... >= L_m with
// W_I = W_{L_1} ... W_{L_m}.
std::vector<Composition> anti_lyndon_factors(const Composition& I);

}  // namespace qshuffle
