#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace l2sig {

/// Arbitrary precision rational, always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q"; result is canonicalized. Throws DomainError on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& q) { return sgn(q); }

/// num / den in lowest terms; den must be nonzero.
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace l2sig
