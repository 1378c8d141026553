#pragma once

#include <gmpxx.h>

#include <string>

namespace qshuffle {

// The scalar field: exact rationals backed by GMP. Results of gmpxx
// arithmetic are always canonical (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

// mpq_class(num, den) does not reduce; this does.
inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return ::sgn(q) == 0; }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// "p" or "p/q", denominator positive.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rational_from_string(const std::string& text) {
    Rational q(text);
    q.canonicalize();
    return q;
}

// 0 whenever n < 0, k < 0 or k > n.
Integer binomial(long n, long k);
Integer factorial(long n);

// Stirling numbers of the second kind by the recurrence
// S(n,k) = k*S(n-1,k) + S(n-1,k-1); used as an independent oracle for
// block-sum checks, never derived from the transition matrices.
Integer stirling2(int n, int k);
Integer bell_number(int n);

}  // namespace qshuffle
