#pragma once

#include "qshuffle/rational.hpp"

#include <map>
#include <utility>

namespace qshuffle {

// Sparse linear combination with exact rational coefficients over an
// ordered key domain. Zero coefficients are never stored, so equality is
// plain map equality.
template <class Key, class Compare = std::less<Key>>
class LinearCombination {
public:
    using map_type = std::map<Key, Rational, Compare>;
    using const_iterator = typename map_type::const_iterator;

    LinearCombination() = default;

    static LinearCombination term(Key key, Rational coeff = 1) {
        LinearCombination out;
        out.add_term(std::move(key), coeff);
        return out;
    }

    void add_term(const Key& key, const Rational& coeff) {
        if (qshuffle::is_zero(coeff)) return;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (qshuffle::is_zero(it->second)) terms_.erase(it);
        }
    }

    void add_scaled(const LinearCombination& other, const Rational& scale) {
        if (qshuffle::is_zero(scale)) return;
        for (const auto& [key, coeff] : other.terms_) add_term(key, coeff * scale);
    }

    LinearCombination& operator+=(const LinearCombination& other) {
        for (const auto& [key, coeff] : other.terms_) add_term(key, coeff);
        return *this;
    }

    LinearCombination& operator-=(const LinearCombination& other) {
        for (const auto& [key, coeff] : other.terms_) add_term(key, -coeff);
        return *this;
    }

    LinearCombination& operator*=(const Rational& scale) {
        if (qshuffle::is_zero(scale)) {
            terms_.clear();
        } else {
            for (auto& [key, coeff] : terms_) coeff *= scale;
        }
        return *this;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) {
        a += b;
        return a;
    }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) {
        a -= b;
        return a;
    }
    friend LinearCombination operator*(LinearCombination a, const Rational& s) {
        a *= s;
        return a;
    }
    friend LinearCombination operator*(const Rational& s, LinearCombination a) {
        a *= s;
        return a;
    }

    Rational coefficient(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool contains(const Key& key) const { return terms_.count(key) != 0; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const map_type& terms() const { return terms_; }

    bool operator==(const LinearCombination& other) const { return terms_ == other.terms_; }

private:
    map_type terms_;
};

// Extends a rule on key pairs to a bilinear product of combinations.
// The rule returns a LinearCombination over the result domain.
template <class Rule, class K1, class C1, class K2, class C2>
auto bilinear_extend(const Rule& rule, const LinearCombination<K1, C1>& lhs,
                     const LinearCombination<K2, C2>& rhs)
    -> decltype(rule(std::declval<const K1&>(), std::declval<const K2&>())) {
    decltype(rule(std::declval<const K1&>(), std::declval<const K2&>())) out;
    for (const auto& [kl, cl] : lhs)
        for (const auto& [kr, cr] : rhs) out.add_scaled(rule(kl, kr), cl * cr);
    return out;
}

}  // namespace qshuffle
