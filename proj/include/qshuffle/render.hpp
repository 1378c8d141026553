#pragma once

#include "qshuffle/colored_permutation.hpp"
#include "qshuffle/composition.hpp"
#include "qshuffle/linear_combination.hpp"
#include "qshuffle/matrix.hpp"

#include <json.hpp>

#include <string>

namespace qshuffle {

// Entries right-aligned to a common width, zeros printed as dots, one
// line per row.
std::string matrix_text(const TransitionMatrix& m);

// {"n", "k", "kind", "order", "entries"}; entries are decimal strings.
nlohmann::ordered_json matrix_json(const TransitionMatrix& m, int n, int k,
                                   const std::string& kind);

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// "2,1,3"; the empty string is the empty composition.
Composition parse_composition(const std::string& text);

// "21;1,2": one digit per permutation letter, comma-separated colors.
ColoredPermutation parse_colored_permutation(const std::string& text);

// Terms in descending order of index: "Z[1,2,1] + 3*Z[2,1,1]".
template <class Key, class Cmp, class KeyText>
std::string lincomb_text(const LinearCombination<Key, Cmp>& lc, const std::string& symbol,
                         KeyText key_text) {
    if (lc.is_zero()) return "0";
    std::string out;
    const auto& terms = lc.terms();
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const bool negative = it->second < 0;
        const Rational magnitude = negative ? Rational(-it->second) : it->second;
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        if (magnitude != 1) out += to_string(magnitude) + "*";
        out += symbol + "[" + key_text(it->first) + "]";
    }
    return out;
}

template <class Key, class Cmp, class KeyJson>
nlohmann::ordered_json lincomb_json(const LinearCombination<Key, Cmp>& lc,
                                    const std::string& basis, KeyJson key_json) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    const auto& map = lc.terms();
    for (auto it = map.rbegin(); it != map.rend(); ++it)
        terms.push_back({{"index", key_json(it->first)}, {"coeff", to_string(it->second)}});
    return {{"basis", basis}, {"terms", terms}};
}

nlohmann::ordered_json composition_json(const Composition& I);
nlohmann::ordered_json colored_permutation_json(const ColoredPermutation& p);

}  // namespace qshuffle
