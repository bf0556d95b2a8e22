#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dgq {

/// Exact coefficients. Every identity checked by this library is exact, so
/// there is no floating point anywhere in the core.
using Rational = mpq_class;
using Integer = mpz_class;

/// n/d in lowest terms. mpq_class(n, d) does not reduce, and GMP arithmetic
/// assumes reduced operands, so build fractions through this.
inline Rational fraction(const Integer& n, const Integer& d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Canonical "p/q" (or "p") string, reduced, sign on the numerator.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q". Decimal points and exponents are rejected.
/// Throws InvalidInput on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace dgq
