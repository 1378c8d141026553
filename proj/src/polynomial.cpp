#include "qshuffle/polynomial.hpp"

#include <cassert>
#include <stdexcept>

namespace qshuffle {

SparsePolynomial SparsePolynomial::constant(int arity, const Rational& c) {
    SparsePolynomial p(arity);
    p.add_term(Exponents(static_cast<size_t>(arity), 0), c);
    return p;
}

SparsePolynomial SparsePolynomial::variable(int arity, int var) {
    if (var < 1 || var > arity) throw std::invalid_argument("variable index out of range");
    SparsePolynomial p(arity);
    Exponents e(static_cast<size_t>(arity), 0);
    e[static_cast<size_t>(var - 1)] = 1;
    p.add_term(e, 1);
    return p;
}

SparsePolynomial SparsePolynomial::linear_form(int arity, const std::vector<int>& vars) {
    SparsePolynomial p(arity);
    for (int v : vars) p += variable(arity, v);
    return p;
}

void SparsePolynomial::add_term(const Exponents& expo, const Rational& coeff) {
    assert(static_cast<int>(expo.size()) == arity_);
    if (qshuffle::is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(expo, coeff);
    if (!inserted) {
        it->second += coeff;
        if (qshuffle::is_zero(it->second)) terms_.erase(it);
    }
}

Rational SparsePolynomial::coefficient(const Exponents& expo) const {
    auto it = terms_.find(expo);
    return it == terms_.end() ? Rational(0) : it->second;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
    assert(arity_ == other.arity_);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
    assert(arity_ == other.arity_);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const Rational& scale) {
    if (qshuffle::is_zero(scale)) {
        terms_.clear();
    } else {
        for (auto& [e, c] : terms_) c *= scale;
    }
    return *this;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& other) const {
    assert(arity_ == other.arity_);
    SparsePolynomial out(arity_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) {
            Exponents e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

SparsePolynomial SparsePolynomial::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("negative polynomial power");
    SparsePolynomial out = constant(arity_, 1);
    for (int i = 0; i < exponent; ++i) out = out * *this;
    return out;
}

SparsePolynomial SparsePolynomial::embedded(int new_arity, int shift) const {
    if (new_arity < arity_ + shift) throw std::invalid_argument("embedding arity too small");
    SparsePolynomial out(new_arity);
    for (const auto& [e, c] : terms_) {
        Exponents widened(static_cast<size_t>(new_arity), 0);
        for (size_t i = 0; i < e.size(); ++i) widened[i + static_cast<size_t>(shift)] = e[i];
        out.add_term(widened, c);
    }
    return out;
}

}  // namespace qshuffle
