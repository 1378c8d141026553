#include "qshuffle/wsym.hpp"

#include "qshuffle/binary_word.hpp"
#include "qshuffle/shuffle.hpp"

#include <stdexcept>

namespace qshuffle {

WSymElement x_element(const Composition& J) {
    WSymElement out;
    if (J.empty()) {
        out.add_term(SetPartition(), 1);
        return out;
    }
    for (const auto& pi : set_partitions(J.degree()))
        if (stat_C(pi) == J) out.add_term(pi, 1);
    return out;
}

std::vector<std::pair<Blocks, Blocks>> co_splits(const SetPartition& pi) {
    const auto& blocks = pi.blocks();
    const size_t m = blocks.size();
    std::vector<std::pair<Blocks, Blocks>> out;
    out.reserve(1u << m);
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        Blocks left, right;
        for (size_t b = 0; b < m; ++b)
            ((mask >> b) & 1ul ? left : right).push_back(blocks[b]);
        out.emplace_back(std::move(left), std::move(right));
    }
    return out;
}

LinearCombination<PartitionPair> coproduct(const SetPartition& pi) {
    LinearCombination<PartitionPair> out;
    for (const auto& [left, right] : co_splits(pi))
        out.add_term({standardize(left), standardize(right)}, 1);
    return out;
}

LinearCombination<PartitionPair> wsym_coproduct(const WSymElement& e) {
    LinearCombination<PartitionPair> out;
    for (const auto& [pi, coeff] : e) out.add_scaled(coproduct(pi), coeff);
    return out;
}

TheoremCheck verify_theorem_coproduct(const Composition& J) {
    if (J.empty()) throw std::invalid_argument("the check needs a nonempty composition");

    const auto lhs = wsym_coproduct(x_element(J));

    LinearCombination<PartitionPair> rhs;
    for (const auto& [words, mult] : unshuffle(word_of_composition(J))) {
        const auto& [w1, w2] = words;
        if (!w1.empty() && !w1.ends_with_b()) continue;
        if (!w2.empty() && !w2.ends_with_b()) continue;
        const auto left = x_element(composition_of_word(w1));
        const auto right = x_element(composition_of_word(w2));
        for (const auto& [p1, c1] : left)
            for (const auto& [p2, c2] : right) rhs.add_term({p1, p2}, mult * c1 * c2);
    }

    if (lhs == rhs) return {};
    for (const auto& [pair, coeff] : lhs) {
        if (rhs.coefficient(pair) != coeff)
            return {false, "coefficient of (" + pair.first.str() + ") (x) (" +
                               pair.second.str() + "): coproduct side " + to_string(coeff) +
                               ", shuffle side " + to_string(rhs.coefficient(pair))};
    }
    for (const auto& [pair, coeff] : rhs) {
        if (lhs.coefficient(pair) != coeff)
            return {false, "coefficient of (" + pair.first.str() + ") (x) (" +
                               pair.second.str() + "): coproduct side " +
                               to_string(lhs.coefficient(pair)) + ", shuffle side " +
                               to_string(coeff)};
    }
    return {false, "sides differ"};
}

Integer c_by_counting(const Composition& I, const Composition& J) {
    if (I.degree() != J.degree())
        throw std::invalid_argument("statistics of one partition have equal degrees");
    Integer count = 0;
    for (const auto& pi : set_partitions(I.degree()))
        if (stat_K(pi) == I && stat_C(pi) == J) ++count;
    return count;
}

TransitionMatrix c_matrix_by_counting(int n, int k) {
    TransitionMatrix m(compositions_of(n, k));
    for (const auto& pi : set_partitions(n)) {
        if (pi.block_count() != k) continue;
        m.at(stat_K(pi), stat_C(pi)) += 1;
    }
    return m;
}

}  // namespace qshuffle
