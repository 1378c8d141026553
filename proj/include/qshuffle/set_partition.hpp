#pragma once

#include "qshuffle/composition.hpp"

#include <compare>
#include <string>
#include <vector>

namespace qshuffle {

// Blocks of a partition of an arbitrary finite set of positive integers:
// each block ascending, blocks sorted by their minima.
using Blocks = std::vector<std::vector<int>>;

Blocks canonical_blocks(Blocks blocks);

// Partition of {1..n} into disjoint nonempty blocks, kept in canonical
// form (see Blocks) for equality and ordering.
class SetPartition {
public:
    SetPartition() = default;  // the empty partition of the empty set
    SetPartition(int ground_size, Blocks blocks);

    int ground_size() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const Blocks& blocks() const { return blocks_; }

    // "12|3|46" for n <= 9, "1,2|3|4,6" above.
    std::string str() const;

    auto operator<=>(const SetPartition& other) const = default;
    bool operator==(const SetPartition& other) const = default;

private:
    int n_ = 0;
    Blocks blocks_;
};

// Relabels the underlying set of a partition of any integer set onto an
// initial interval {1..m}, preserving relative order.
SetPartition standardize(const Blocks& blocks);

// All set partitions of {1..n}; Bell(n) of them, deterministic order.
std::vector<SetPartition> set_partitions(int n);
// Those with exactly k blocks; S(n,k) of them.
std::vector<SetPartition> set_partitions(int n, int k);

// Block sizes, blocks ordered by increasing maxima.
Composition stat_K(const SetPartition& pi);
// Block sizes, blocks ordered by increasing minima.
Composition stat_K_prime(const SetPartition& pi);
// Block maxima minus {n}, read as the descent set of a composition of n.
Composition stat_C(const SetPartition& pi);
// Block minima, decremented, minus {0}, read as a descent set.
Composition stat_C_prime(const SetPartition& pi);

// Signed words encode partitions of an integer set: order blocks by
// increasing maxima, sort each block, concatenate, and sign (overline)
// the last element of each block. In a valid word the signed values
// increase, an unsigned letter is smaller than its successor, and the
// final letter is signed.
struct SignedLetter {
    int value = 0;
    bool overlined = false;
    auto operator<=>(const SignedLetter&) const = default;
};

class SignedWord {
public:
    SignedWord() = default;
    explicit SignedWord(std::vector<SignedLetter> letters) : letters_(std::move(letters)) {}

    const std::vector<SignedLetter>& letters() const { return letters_; }
    size_t size() const { return letters_.size(); }
    bool is_valid() const;

    // "3 4 6' 5' 1 2 7'" (trailing apostrophe marks an overline).
    std::string str() const;

    auto operator<=>(const SignedWord&) const = default;

private:
    std::vector<SignedLetter> letters_;
};

SignedWord signed_word_of_blocks(const Blocks& blocks);
inline SignedWord signed_word_of_partition(const SetPartition& pi) {
    return signed_word_of_blocks(pi.blocks());
}

// Inverse of signed_word_of_blocks; rejects invalid words.
Blocks blocks_of_signed_word(const SignedWord& w);

// All partitions of the set S whose set of block maxima is exactly Sprime.
// Requires Sprime to be a subset of S.
std::vector<Blocks> sp_enumerate(const std::vector<int>& S, const std::vector<int>& Sprime);

}  // namespace qshuffle
