#include "qshuffle/render.hpp"

#include <algorithm>

namespace qshuffle {

std::string matrix_text(const TransitionMatrix& m) {
    std::vector<std::vector<std::string>> cells(static_cast<size_t>(m.dim()));
    size_t width = 1;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) {
            std::string cell = is_zero(m.at(i, j)) ? "." : to_string(m.at(i, j));
            width = std::max(width, cell.size());
            cells[static_cast<size_t>(i)].push_back(std::move(cell));
        }
    std::string out;
    for (const auto& row : cells) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) out += ' ';
            out.append(width - row[j].size(), ' ');
            out += row[j];
        }
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json matrix_json(const TransitionMatrix& m, int n, int k,
                                   const std::string& kind) {
    nlohmann::ordered_json order = nlohmann::ordered_json::array();
    for (const auto& I : m.index()) order.push_back(I.parts());
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (int i = 0; i < m.dim(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(to_string(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return {{"n", n}, {"k", k}, {"kind", kind}, {"order", order}, {"entries", entries}};
}

namespace {

int parse_int(const std::string& text, size_t& pos) {
    const size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start)
        throw ParseError("expected a digit at position " + std::to_string(start + 1));
    return std::stoi(text.substr(start, pos - start));
}

std::vector<int> parse_int_list(const std::string& text, size_t offset) {
    std::vector<int> out;
    if (text.empty()) return out;
    size_t pos = 0;
    while (true) {
        const size_t at = offset + pos;
        out.push_back(parse_int(text, pos));
        if (pos == text.size()) break;
        if (text[pos] != ',')
            throw ParseError("expected ',' at position " + std::to_string(at + 1));
        ++pos;
    }
    return out;
}

}  // namespace

Composition parse_composition(const std::string& text) {
    try {
        return Composition(parse_int_list(text, 0));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad composition '") + text + "': " + e.what());
    }
}

ColoredPermutation parse_colored_permutation(const std::string& text) {
    const size_t sep = text.find(';');
    if (sep == std::string::npos)
        throw ParseError("colored permutation needs the form 'sigma;colors'");
    std::vector<int> sigma;
    for (size_t i = 0; i < sep; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '0')
            throw ParseError("expected a permutation digit at position " + std::to_string(i + 1));
        sigma.push_back(text[i] - '0');
    }
    try {
        return ColoredPermutation(std::move(sigma),
                                  parse_int_list(text.substr(sep + 1), sep + 1));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad colored permutation '") + text + "': " + e.what());
    }
}

nlohmann::ordered_json composition_json(const Composition& I) {
    return nlohmann::ordered_json(I.parts());
}

nlohmann::ordered_json colored_permutation_json(const ColoredPermutation& p) {
    return {{"sigma", p.sigma()}, {"colors", p.colors()}};
}

}  // namespace qshuffle
