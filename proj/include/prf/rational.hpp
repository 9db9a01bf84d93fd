#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace prf {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p" or "p/q"; throws prf::Error on malformed input or q == 0.
Rational parse_rational(std::string_view text);

/// "p" when integral, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Fixed-point rendering with `digits` fractional digits, rounded toward the
/// nearest (ties away from zero).
std::string to_decimal(const Rational& q, int digits = 6);

int sign(const Rational& q);
int sign(const Integer& z);

Integer floor(const Rational& q);

/// Bit length of |numerator| + bit length of denominator.
std::size_t bit_size(const Rational& q);

/// Smallest-denominator rational in the open interval (lo, hi); lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace prf
