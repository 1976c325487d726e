// Exact arbitrary-precision integers and rationals (GMP-backed).
#ifndef MILNOR_RATIONAL_HPP
#define MILNOR_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace milnor {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms; den forced positive.
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Canonical text form: "num" or "num/den" with den > 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace milnor

#endif
