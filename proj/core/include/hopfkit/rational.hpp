#pragma once

#include <gmpxx.h>

#include <string>

namespace hopfkit {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// `a` or `a/b` with b > 0.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Exact square root of a non-negative perfect square; false otherwise.
inline bool exact_sqrt(const Integer& n, Integer& root) {
  if (sgn(n) < 0) return false;
  root = sqrt(n);
  return root * root == n;
}

}  // namespace hopfkit
