#include "hopfkit/integrality.hpp"

#include "hopfkit/factor.hpp"
#include "hopfkit/matrix.hpp"

namespace hopfkit {

Poly<Rational> min_poly_scalar(const CycScalar& a) {
  if (a.is_rational()) return Poly<Rational>::linear(a.rational());
  const unsigned order = a.order();
  std::vector<std::vector<Rational>> powers{CycScalar(1).coords_in(order)};
  CycScalar pw = a;
  while (true) {
    const std::vector<Rational> v = pw.coords_in(order);
    if (const auto c = coordinates<Rational>(std::span<const std::vector<Rational>>(powers), v)) {
      std::vector<Rational> coeffs(powers.size() + 1);
      for (std::size_t i = 0; i < powers.size(); ++i) coeffs[i] = -(*c)[i];
      coeffs.back() = 1;
      return Poly<Rational>(std::move(coeffs));
    }
    powers.push_back(v);
    pw *= a;
  }
}

IntegralityCertificate is_algebraic_integer(const CycScalar& a) {
  IntegralityCertificate cert{a, min_poly_scalar(a), true};
  for (const Rational& c : cert.minimal_polynomial.coeffs()) {
    if (!is_integer(c)) cert.is_integer = false;
  }
  return cert;
}

bool replay(const IntegralityCertificate& cert) {
  const Poly<Rational>& p = cert.minimal_polynomial;
  if (!p.is_monic()) return false;
  if (!to_cyclotomic(p)(cert.subject).is_zero()) return false;
  const RationalFactorization f = factor_rational(p);
  if (f.factors.size() != 1 || f.factors[0].multiplicity != 1) return false;
  bool integral = true;
  for (const Rational& c : p.coeffs()) integral = integral && is_integer(c);
  return integral == cert.is_integer;
}

}  // namespace hopfkit
