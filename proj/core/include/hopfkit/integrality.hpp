#pragma once

#include "hopfkit/cyclotomic.hpp"
#include "hopfkit/poly.hpp"

namespace hopfkit {

/// Monic minimal polynomial of `a` over Q: the least-degree monic linear
/// dependency among 1, a, a^2, ... in the power-basis coordinates.
Poly<Rational> min_poly_scalar(const CycScalar& a);

/// Witness that `subject` is (or is not) an algebraic integer.
struct IntegralityCertificate {
  CycScalar subject;
  Poly<Rational> minimal_polynomial;  // monic, irreducible over Q
  bool is_integer = false;            // all coefficients are rational integers
};

IntegralityCertificate is_algebraic_integer(const CycScalar& a);

/// Re-check a certificate from scratch: the polynomial is monic, annihilates the
/// subject, is irreducible, and its integrality matches the flag.
bool replay(const IntegralityCertificate& cert);

}  // namespace hopfkit
