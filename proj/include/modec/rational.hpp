#pragma once

#include <gmpxx.h>

#include <string>

#include "modec/errors.hpp"

namespace modec {

// Arbitrary-precision arithmetic is delegated to GMP. mpq_class keeps the
// invariants we need (positive denominator, reduced to lowest terms) as long
// as values are built through these helpers.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat_of(long n) { return Rational(n); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Prints "p" when the denominator is 1, else "p/q".
inline std::string rat_to_string(const Rational& q) {
    return q.get_str();
}

} // namespace modec
