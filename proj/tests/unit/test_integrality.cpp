#include <gtest/gtest.h>

#include "hopfkit/integrality.hpp"

namespace hopfkit {
namespace {

Poly<Rational> from_ints(std::initializer_list<long> low_to_high) {
  std::vector<Rational> c;
  for (long x : low_to_high) c.emplace_back(x);
  return Poly<Rational>(std::move(c));
}

TEST(Integrality, RootsOfUnityAndTheirSumsAreIntegral) {
  for (unsigned n : {3U, 4U, 5U, 8U, 12U}) {
    const IntegralityCertificate c = is_algebraic_integer(CycScalar::zeta(n));
    EXPECT_TRUE(c.is_integer);
    EXPECT_TRUE(replay(c));
    EXPECT_EQ(c.minimal_polynomial.degree(), static_cast<int>(euler_phi(n)));
  }
  // 1 + zeta_3 = -zeta_3^2 has minimal polynomial x^2 - x + 1.
  const IntegralityCertificate c = is_algebraic_integer(CycScalar(1) + CycScalar::zeta(3));
  EXPECT_EQ(c.minimal_polynomial, from_ints({1, -1, 1}));
  EXPECT_TRUE(c.is_integer);
}

TEST(Integrality, GoldenRatioIsIntegral) {
  // (1 + sqrt 5) / 2 with sqrt 5 = 1 + 2 (z + z^4) in Q(zeta_5)
  const CycScalar sqrt5 = CycScalar(1) + CycScalar(2) * (CycScalar::zeta(5) + CycScalar::zeta(5, 4));
  ASSERT_EQ(sqrt5 * sqrt5, CycScalar(5));
  const IntegralityCertificate c = is_algebraic_integer((CycScalar(1) + sqrt5) / CycScalar(2));
  EXPECT_EQ(c.minimal_polynomial, from_ints({-1, -1, 1}));
  EXPECT_TRUE(c.is_integer);
  EXPECT_TRUE(replay(c));
}

TEST(Integrality, NonIntegersAreRejectedWithCertificate) {
  for (const CycScalar& a : {CycScalar(Rational(1, 2)), CycScalar::zeta(4) / CycScalar(2),
                             (CycScalar(1) + CycScalar::zeta(8) + CycScalar::zeta(8, 7)) / CycScalar(3)}) {
    const IntegralityCertificate c = is_algebraic_integer(a);
    EXPECT_FALSE(c.is_integer) << a.to_string();
    EXPECT_TRUE(replay(c));
  }
  // sqrt(2) / 2 satisfies x^2 - 1/2.
  const CycScalar half_sqrt2 = (CycScalar::zeta(8) + CycScalar::zeta(8, 7)) / CycScalar(2);
  EXPECT_EQ(min_poly_scalar(half_sqrt2), Poly<Rational>({Rational(-1, 2), Rational(0), Rational(1)}));
}

TEST(Integrality, ReplayDetectsTamperedCertificates) {
  IntegralityCertificate c = is_algebraic_integer(CycScalar::zeta(3));
  c.is_integer = false;
  EXPECT_FALSE(replay(c));
  c = is_algebraic_integer(CycScalar::zeta(3));
  c.minimal_polynomial = from_ints({1, 0, 1});
  EXPECT_FALSE(replay(c));
  // A reducible annihilator is not a minimal polynomial.
  c = is_algebraic_integer(CycScalar(2));
  c.minimal_polynomial = from_ints({-2, 1}) * from_ints({1, 1});
  EXPECT_FALSE(replay(c));
}

}  // namespace
}  // namespace hopfkit
