#include "qshuffle/y_basis.hpp"

#include "qshuffle/binary_word.hpp"
#include "qshuffle/shuffle.hpp"

#include <stdexcept>

namespace qshuffle {

namespace {

template <class L>
LinearCombination<std::vector<L>> fold_shuffle(Shuffler<L>& sh,
                                               const std::vector<std::vector<L>>& words) {
    LinearCombination<std::vector<L>> acc = LinearCombination<std::vector<L>>::term(words.front());
    for (size_t t = 1; t < words.size(); ++t) {
        LinearCombination<std::vector<L>> next;
        for (const auto& [w, c] : acc) next.add_scaled(sh(w, words[t]), c);
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

YBasisTable::YBasisTable(int degree) : degree_(degree) {
    if (degree < 1) throw std::invalid_argument("degree must be positive");
    Shuffler<uint8_t> word_shuffler;
    Shuffler<int> comp_shuffler;

    for (const Composition& I : compositions_desc_lex(degree)) {
        const auto factors = anti_lyndon_factors(I);
        if (factors.size() == 1) {
            table_.emplace(I, LinearCombination<Composition>::term(I));
            continue;
        }

        std::vector<std::vector<uint8_t>> factor_bits;
        std::vector<std::vector<int>> factor_parts;
        for (const auto& L : factors) {
            factor_bits.push_back(word_of_composition(L).bits());
            factor_parts.push_back(L.parts());
        }

        LinearCombination<Composition> lhs;
        for (const auto& [bits, coeff] : fold_shuffle(word_shuffler, factor_bits))
            lhs.add_term(composition_of_word(BinaryWord(bits)), coeff);

        const auto rhs = fold_shuffle(comp_shuffler, factor_parts);
        const Rational lead = rhs.coefficient(I.parts());
        if (is_zero(lead))
            throw std::logic_error("triangular solve hit a zero leading coefficient");

        for (const auto& [parts, coeff] : rhs) {
            Composition K(parts);
            if (K == I) continue;
            auto known = table_.find(K);
            if (known == table_.end())
                throw std::logic_error("triangular solve needs a not-yet-known term");
            lhs.add_scaled(known->second, -coeff);
        }
        lhs *= 1 / lead;

        // Entries are integers supported on {J : l(J) = l(I), J >= I}. They
        // are usually positive but not always: the first signed entry is
        // the coefficient -6 of W_{3111} in Y_{1221}.
        for (const auto& [J, coeff] : lhs) {
            if (!is_integer(coeff) || J.length() != I.length() || J < I)
                throw std::logic_error("triangular solve produced an invalid expansion");
        }
        table_.emplace(I, std::move(lhs));
    }
}

const LinearCombination<Composition>& YBasisTable::expansion(const Composition& I) const {
    auto it = table_.find(I);
    if (it == table_.end()) throw std::invalid_argument("composition outside this degree");
    return it->second;
}

TransitionMatrix y_matrix(const YBasisTable& table, int k) {
    TransitionMatrix m(compositions_of(table.degree(), k));
    for (const Composition& J : m.index())
        for (const auto& [I, coeff] : table.expansion(J)) m.at(I, J) = coeff;
    return m;
}

TransitionMatrix y_matrix(int n, int k) { return y_matrix(YBasisTable(n), k); }

}  // namespace qshuffle
