#pragma once

#include "qshuffle/rational.hpp"

#include <map>
#include <vector>

namespace qshuffle {

// Sparse polynomial in a fixed number of commuting variables with exact
// rational coefficients. Exponent vectors all have length arity().
class SparsePolynomial {
public:
    using Exponents = std::vector<int>;

    explicit SparsePolynomial(int arity) : arity_(arity) {}

    static SparsePolynomial constant(int arity, const Rational& c);
    static SparsePolynomial variable(int arity, int var /* 1-based */);
    // u_{i1} + ... + u_{ik} for a set of variable indices.
    static SparsePolynomial linear_form(int arity, const std::vector<int>& vars);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    void add_term(const Exponents& expo, const Rational& coeff);
    Rational coefficient(const Exponents& expo) const;

    SparsePolynomial& operator+=(const SparsePolynomial& other);
    SparsePolynomial& operator-=(const SparsePolynomial& other);
    SparsePolynomial& operator*=(const Rational& scale);
    SparsePolynomial operator*(const SparsePolynomial& other) const;
    SparsePolynomial pow(int exponent) const;

    // Same polynomial seen in a wider variable set, variables shifted up
    // by `shift`.
    SparsePolynomial embedded(int new_arity, int shift) const;

    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) {
        a += b;
        return a;
    }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) {
        a -= b;
        return a;
    }

    bool operator==(const SparsePolynomial& other) const = default;

private:
    int arity_;
    std::map<Exponents, Rational> terms_;
};

}  // namespace qshuffle
