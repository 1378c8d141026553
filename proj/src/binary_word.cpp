#include "qshuffle/binary_word.hpp"

#include <stdexcept>

namespace qshuffle {

BinaryWord::BinaryWord(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
    for (uint8_t x : bits_)
        if (x > 1) throw std::invalid_argument("binary word letters must be 0 or 1");
}

BinaryWord BinaryWord::parse(std::string_view text) {
    std::vector<uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c == 'a')
            bits.push_back(0);
        else if (c == 'b')
            bits.push_back(1);
        else
            throw std::invalid_argument("binary word letters must be 'a' or 'b'");
    }
    return BinaryWord(std::move(bits));
}

BinaryWord BinaryWord::concat(const BinaryWord& tail) const {
    std::vector<uint8_t> bits = bits_;
    bits.insert(bits.end(), tail.bits_.begin(), tail.bits_.end());
    return BinaryWord(std::move(bits));
}

BinaryWord BinaryWord::reversed() const {
    return BinaryWord(std::vector<uint8_t>(bits_.rbegin(), bits_.rend()));
}

std::string BinaryWord::str() const {
    std::string out;
    out.reserve(bits_.size());
    for (uint8_t x : bits_) out += (x ? 'b' : 'a');
    return out;
}

BinaryWord word_of_composition(const Composition& I) {
    std::vector<uint8_t> bits;
    bits.reserve(static_cast<size_t>(I.degree()));
    for (int p : I.parts()) {
        bits.insert(bits.end(), static_cast<size_t>(p - 1), 0);
        bits.push_back(1);
    }
    return BinaryWord(std::move(bits));
}

Composition composition_of_word(const BinaryWord& w) {
    if (!w.empty() && !w.ends_with_b())
        throw std::invalid_argument("only words ending in b encode compositions");
    std::vector<int> parts;
    int run = 0;
    for (uint8_t x : w.bits()) {
        ++run;
        if (x == 1) {
            parts.push_back(run);
            run = 0;
        }
    }
    return Composition(std::move(parts));
}

bool is_lyndon(const BinaryWord& w) {
    const auto& v = w.bits();
    const size_t n = v.size();
    if (n == 0) return false;
    for (size_t r = 1; r < n; ++r) {
        // Compare w with its rotation starting at r.
        for (size_t i = 0; i < n; ++i) {
            uint8_t x = v[i], y = v[(r + i) % n];
            if (x < y) break;
            if (x > y) return false;
            if (i + 1 == n) return false;  // equal to a proper rotation
        }
    }
    return true;
}

bool is_anti_lyndon(const Composition& I) {
    return !I.empty() && is_lyndon(word_of_composition(I));
}

std::vector<BinaryWord> lyndon_words(int length) {
    std::vector<BinaryWord> out;
    if (length < 1) return out;
    // Duval: successor iteration over Lyndon words of length <= n,
    // produced in lexicographic order.
    std::vector<uint8_t> w{0};
    while (true) {
        if (static_cast<int>(w.size()) == length) out.emplace_back(w);
        size_t k = w.size();
        w.resize(static_cast<size_t>(length));
        for (size_t i = k; i < w.size(); ++i) w[i] = w[i - k];
        while (!w.empty() && w.back() == 1) w.pop_back();
        if (w.empty()) break;
        w.back() = 1;
    }
    return out;
}

std::vector<BinaryWord> lyndon_factorization(const BinaryWord& w) {
    if (w.empty()) throw std::invalid_argument("cannot factorize the empty word");
    const auto& v = w.bits();
    const size_t n = v.size();
    std::vector<BinaryWord> factors;
    size_t i = 0;
    while (i < n) {
        size_t j = i + 1, k = i;
        while (j < n && v[k] <= v[j]) {
            k = (v[k] < v[j]) ? i : k + 1;
            ++j;
        }
        const size_t len = j - k;
        while (i <= k) {
            factors.emplace_back(std::vector<uint8_t>(v.begin() + static_cast<long>(i),
                                                      v.begin() + static_cast<long>(i + len)));
            i += len;
        }
    }
    return factors;
}

std::vector<Composition> anti_lyndon_factors(const Composition& I) {
    std::vector<Composition> out;
    for (const auto& f : lyndon_factorization(word_of_composition(I)))
        out.push_back(composition_of_word(f));
    return out;
}

}  // namespace qshuffle
