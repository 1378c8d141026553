#include "qshuffle/set_partition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qshuffle {

Blocks canonical_blocks(Blocks blocks) {
    for (auto& block : blocks) {
        if (block.empty()) throw std::invalid_argument("empty block");
        std::sort(block.begin(), block.end());
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return blocks;
}

SetPartition::SetPartition(int ground_size, Blocks blocks)
    : n_(ground_size), blocks_(canonical_blocks(std::move(blocks))) {
    std::set<int> seen;
    for (const auto& block : blocks_)
        for (int x : block) {
            if (x < 1 || x > n_) throw std::invalid_argument("element outside {1..n}");
            if (!seen.insert(x).second) throw std::invalid_argument("blocks overlap");
        }
    if (static_cast<int>(seen.size()) != n_)
        throw std::invalid_argument("blocks do not cover {1..n}");
}

std::string SetPartition::str() const {
    bool compact = n_ <= 9;
    std::string out;
    for (size_t b = 0; b < blocks_.size(); ++b) {
        if (b) out += '|';
        for (size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i && !compact) out += ',';
            out += std::to_string(blocks_[b][i]);
        }
    }
    return out;
}

SetPartition standardize(const Blocks& blocks) {
    std::set<int> values;
    for (const auto& block : blocks) values.insert(block.begin(), block.end());
    std::map<int, int> rank;
    int next = 1;
    for (int v : values) rank[v] = next++;
    Blocks out;
    for (const auto& block : blocks) {
        std::vector<int> relabeled;
        relabeled.reserve(block.size());
        for (int v : block) relabeled.push_back(rank.at(v));
        out.push_back(std::move(relabeled));
    }
    return SetPartition(static_cast<int>(values.size()), std::move(out));
}

std::vector<SetPartition> set_partitions(int n) {
    std::vector<SetPartition> out;
    if (n < 0) return out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    Blocks current;
    // Insert 1..n in order: each element joins an existing block or opens
    // a new one; every partition is produced exactly once.
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            out.emplace_back(n, current);
            return;
        }
        // Index-based: the recursive call below may reallocate `current`.
        for (size_t b = 0; b < current.size(); ++b) {
            current[b].push_back(next);
            self(self, next + 1);
            current[b].pop_back();
        }
        current.push_back({next});
        self(self, next + 1);
        current.pop_back();
    };
    rec(rec, 1);
    return out;
}

std::vector<SetPartition> set_partitions(int n, int k) {
    std::vector<SetPartition> out;
    for (auto& pi : set_partitions(n))
        if (pi.block_count() == k) out.push_back(std::move(pi));
    return out;
}

namespace {

// Blocks reordered by increasing maxima.
Blocks by_increasing_maxima(const Blocks& blocks) {
    Blocks sorted = blocks;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.back() < b.back(); });
    return sorted;
}

}  // namespace

Composition stat_K(const SetPartition& pi) {
    std::vector<int> sizes;
    for (const auto& block : by_increasing_maxima(pi.blocks()))
        sizes.push_back(static_cast<int>(block.size()));
    return Composition(std::move(sizes));
}

Composition stat_K_prime(const SetPartition& pi) {
    std::vector<int> sizes;  // canonical blocks are already sorted by minima
    for (const auto& block : pi.blocks()) sizes.push_back(static_cast<int>(block.size()));
    return Composition(std::move(sizes));
}

Composition stat_C(const SetPartition& pi) {
    std::vector<int> descents;
    for (const auto& block : pi.blocks())
        if (block.back() != pi.ground_size()) descents.push_back(block.back());
    return subset_to_composition(descents, pi.ground_size());
}

Composition stat_C_prime(const SetPartition& pi) {
    std::vector<int> descents;
    for (const auto& block : pi.blocks())
        if (block.front() != 1) descents.push_back(block.front() - 1);
    return subset_to_composition(descents, pi.ground_size());
}

bool SignedWord::is_valid() const {
    if (letters_.empty()) return true;
    if (!letters_.back().overlined) return false;
    int last_signed = 0;
    for (size_t i = 0; i < letters_.size(); ++i) {
        const auto& l = letters_[i];
        if (l.value < 1) return false;
        if (l.overlined) {
            if (l.value <= last_signed) return false;
            last_signed = l.value;
        } else {
            if (i + 1 == letters_.size()) return false;
            if (l.value >= letters_[i + 1].value) return false;
        }
    }
    return true;
}

std::string SignedWord::str() const {
    std::string out;
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(letters_[i].value);
        if (letters_[i].overlined) out += '\'';
    }
    return out;
}

SignedWord signed_word_of_blocks(const Blocks& blocks) {
    std::vector<SignedLetter> letters;
    for (const auto& block : by_increasing_maxima(canonical_blocks(blocks)))
        for (size_t i = 0; i < block.size(); ++i)
            letters.push_back({block[i], i + 1 == block.size()});
    return SignedWord(std::move(letters));
}

Blocks blocks_of_signed_word(const SignedWord& w) {
    if (!w.is_valid()) throw std::invalid_argument("not a valid signed word");
    Blocks blocks;
    std::vector<int> block;
    for (const auto& l : w.letters()) {
        block.push_back(l.value);
        if (l.overlined) {
            blocks.push_back(block);
            block.clear();
        }
    }
    return canonical_blocks(std::move(blocks));
}

std::vector<Blocks> sp_enumerate(const std::vector<int>& S, const std::vector<int>& Sprime) {
    std::set<int> ground(S.begin(), S.end());
    std::vector<int> maxima(Sprime.begin(), Sprime.end());
    std::sort(maxima.begin(), maxima.end());
    for (int m : maxima)
        if (!ground.count(m))
            throw std::invalid_argument("maxima set is not a subset of the ground set");

    std::vector<int> rest;
    for (int x : ground)
        if (!std::binary_search(maxima.begin(), maxima.end(), x)) rest.push_back(x);

    std::vector<Blocks> out;
    if (maxima.empty()) {
        if (rest.empty()) out.push_back({});
        return out;
    }
    Blocks current(maxima.size());
    for (size_t b = 0; b < maxima.size(); ++b) current[b] = {maxima[b]};
    // Every non-maximal element must join the block of a larger maximum.
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == rest.size()) {
            out.push_back(canonical_blocks(current));
            return;
        }
        for (size_t b = 0; b < maxima.size(); ++b) {
            if (maxima[b] > rest[idx]) {
                current[b].push_back(rest[idx]);
                self(self, idx + 1);
                current[b].pop_back();
            }
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace qshuffle
