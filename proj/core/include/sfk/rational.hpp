#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sfk {

using Rational = mpq_class;

/// Parses "p", "p/q" or a plain decimal like "0.05" into an exact rational.
Rational parse_rational(const std::string& text);

Rational pow_rational(const Rational& base, long exponent);

/// Canonicalized fraction (the two-argument mpq constructor does not reduce).
inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace sfk
