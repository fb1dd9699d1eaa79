#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nlie {

/// Exact rationals. mpq_class keeps values canonical (gcd 1, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a" or "a/b" with an optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// num/den in canonical form (mpq_class's two-argument constructor does not reduce).
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace nlie
