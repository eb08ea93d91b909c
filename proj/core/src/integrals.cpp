#include "hopfkit/integrals.hpp"

#include "hopfkit/error.hpp"

namespace hopfkit {

std::vector<Vector> left_integral_space(const HopfData& h) {
  const std::size_t d = h.dim();
  // Row (i, k): sum_j x_j mult(i, j, k) - eps(b_i) x_k = 0.
  Matrix<CycScalar> system(d * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j)
      for (const Term& t : h.product(i, j)) system(i * d + t.index, j) += t.value;
    for (std::size_t k = 0; k < d; ++k) system(i * d + k, k) -= h.counit()[i];
  }
  return kernel_basis(system);
}

IntegralPair compute_integrals(const HopfData& h) {
  const std::size_t d = h.dim();
  const std::vector<Vector> left = left_integral_space(h);
  if (left.size() != 1) {
    throw IntegralSpaceError("left integral space of " + h.name() + " has dimension " + std::to_string(left.size()) +
                             ", expected 1");
  }
  const std::vector<Vector> dual_left = left_integral_space(dualize(h));
  if (dual_left.size() != 1) {
    throw IntegralSpaceError("left integral space of " + h.name() + "* has dimension " +
                             std::to_string(dual_left.size()) + ", expected 1");
  }
  const Vector& raw = left[0];
  const Vector& dual_raw = dual_left[0];

  IntegralPair out;
  const CycScalar eps_raw = pair(h.counit(), raw);
  const CycScalar lambda_one = pair(dual_raw, h.unit());
  out.semisimple = !eps_raw.is_zero();
  out.cosemisimple = !lambda_one.is_zero();
  if (!out.cosemisimple) throw NotSemisimple(h.name() + " is not cosemisimple: lambda(1) = 0");
  if (!out.semisimple) throw NotSemisimple(h.name() + " is not semisimple: eps(Lambda) = 0");

  out.dual_integral = scale(lambda_one.inverse(), dual_raw);
  const CycScalar pairing = pair(out.dual_integral, raw);
  if (pairing.is_zero()) throw NotSemisimple(h.name() + ": <lambda, Lambda> = 0");
  out.integral = scale(pairing.inverse(), raw);
  out.integral_scaled = scale(CycScalar(Rational(1, static_cast<unsigned long>(d))), out.integral);

  if (pair(h.counit(), out.integral) != CycScalar(static_cast<long>(d))) {
    throw VerificationFailure(h.name() + ": <eps, Lambda> != dim H after normalization");
  }

  out.two_sided = true;
  for (std::size_t i = 0; i < d && out.two_sided; ++i) {
    const Vector right = multiply(h, out.integral, basis_vector(d, i));
    out.two_sided = right == scale(h.counit()[i], out.integral);
  }
  return out;
}

}  // namespace hopfkit
