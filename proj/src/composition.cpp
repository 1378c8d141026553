#include "qshuffle/composition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qshuffle {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
}

int Composition::degree() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::reversed() const {
    return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

Composition Composition::concat(const Composition& tail) const {
    std::vector<int> parts = parts_;
    parts.insert(parts.end(), tail.parts_.begin(), tail.parts_.end());
    return Composition(std::move(parts));
}

Composition Composition::appended(int part) const {
    std::vector<int> parts = parts_;
    parts.push_back(part);
    return Composition(std::move(parts));
}

std::string Composition::str() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

namespace {

void emit_desc(int n, int k, std::vector<int>& prefix, std::vector<Composition>& out) {
    if (k == 0) {
        if (n == 0) out.emplace_back(prefix);
        return;
    }
    // Largest first part first keeps the whole block in descending order.
    for (int first = n - k + 1; first >= 1; --first) {
        prefix.push_back(first);
        emit_desc(n - first, k - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Composition> compositions_of(int n, int k) {
    std::vector<Composition> out;
    if (n < 0 || k < 0 || k > n) return out;
    std::vector<int> prefix;
    emit_desc(n, k, prefix, out);
    return out;
}

std::vector<Composition> compositions_of(int n) {
    if (n == 0) return {Composition()};
    std::vector<Composition> out;
    for (int k = 1; k <= n; ++k) {
        auto block = compositions_of(n, k);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

std::vector<Composition> compositions_desc_lex(int n) {
    auto all = compositions_of(n);
    std::sort(all.begin(), all.end(),
              [](const Composition& a, const Composition& b) { return b < a; });
    return all;
}

Composition subset_to_composition(const std::vector<int>& subset, int n) {
    std::vector<int> s = subset;
    std::sort(s.begin(), s.end());
    if (!s.empty() && (s.front() < 1 || s.back() > n - 1))
        throw std::invalid_argument("descent set must lie in {1..n-1}");
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("descent set has a repeated element");
    std::vector<int> parts;
    int prev = 0;
    for (int d : s) {
        parts.push_back(d - prev);
        prev = d;
    }
    if (n > 0) parts.push_back(n - prev);
    return Composition(std::move(parts));
}

std::vector<int> composition_to_subset(const Composition& I) {
    std::vector<int> out;
    int sum = 0;
    for (size_t i = 0; i + 1 < I.parts().size(); ++i) {
        sum += I.parts()[i];
        out.push_back(sum);
    }
    return out;
}

}  // namespace qshuffle
