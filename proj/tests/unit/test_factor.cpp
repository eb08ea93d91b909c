#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hopfkit/cyclotomic.hpp"
#include "hopfkit/factor.hpp"

namespace hopfkit {
namespace {

using QPoly = Poly<Rational>;
using KPoly = Poly<CycScalar>;

QPoly from_ints(std::initializer_list<long> low_to_high) {
  std::vector<Rational> c;
  for (long x : low_to_high) c.emplace_back(x);
  return QPoly(std::move(c));
}

QPoly cyclotomic(unsigned n) {
  std::vector<Rational> c;
  for (const Integer& x : cyclotomic_polynomial(n)) c.emplace_back(x);
  return QPoly(std::move(c));
}

QPoly expand(const RationalFactorization& f) {
  QPoly p = QPoly::constant(f.unit);
  for (const RationalFactor& rf : f.factors)
    for (unsigned k = 0; k < rf.multiplicity; ++k) p = p * rf.factor;
  return p;
}

std::vector<QPoly> sorted_factors(const RationalFactorization& f) {
  std::vector<QPoly> out;
  for (const RationalFactor& rf : f.factors)
    for (unsigned k = 0; k < rf.multiplicity; ++k) out.push_back(rf.factor);
  std::sort(out.begin(), out.end(), [](const QPoly& a, const QPoly& b) { return a.to_string() < b.to_string(); });
  return out;
}

TEST(FactorRational, XSixMinusOneGivesFourCyclotomicFactors) {
  const QPoly p = from_ints({-1, 0, 0, 0, 0, 0, 1});
  const RationalFactorization f = factor_rational(p);
  RationalFactorization expected{1, {}};
  for (unsigned d : {1U, 2U, 3U, 6U}) expected.factors.push_back({cyclotomic(d), 1});
  EXPECT_EQ(sorted_factors(f), sorted_factors(expected));
  EXPECT_EQ(expand(f), p);
}

TEST(FactorRational, PhiTwelveIsIrreducible) {
  const QPoly p = from_ints({1, 0, -1, 0, 1});
  const RationalFactorization f = factor_rational(p);
  ASSERT_EQ(f.factors.size(), 1U);
  EXPECT_EQ(f.factors[0].factor, p);
  EXPECT_EQ(f.factors[0].multiplicity, 1U);
}

TEST(FactorRational, ContentAndMultiplicities) {
  // 6 (x - 1)^3 (x + 2)
  const QPoly p = QPoly::constant(6) * from_ints({-1, 1}) * from_ints({-1, 1}) * from_ints({-1, 1}) * from_ints({2, 1});
  const RationalFactorization f = factor_rational(p);
  EXPECT_EQ(f.unit, Rational(6));
  ASSERT_EQ(f.factors.size(), 2U);
  EXPECT_EQ(expand(f), p);
  for (const RationalFactor& rf : f.factors) {
    EXPECT_EQ(rf.multiplicity, rf.factor == from_ints({-1, 1}) ? 3U : 1U);
  }
  EXPECT_TRUE(factor_rational(QPoly::constant(5)).factors.empty());
}

TEST(FactorRational, RecombinationOnPolynomialsSplittingModEveryPrime) {
  // x^4 - 10 x^2 + 1 is irreducible but factors modulo every prime.
  const QPoly p = from_ints({1, 0, -10, 0, 1});
  const RationalFactorization f = factor_rational(p);
  ASSERT_EQ(f.factors.size(), 1U);
  EXPECT_EQ(f.factors[0].factor, p);
}

TEST(FactorRational, LargeRootsNeedLifting) {
  const QPoly p = from_ints({-12345678901L, 1}) * from_ints({98765432109L, 1}) * from_ints({3, 0, 1});
  const RationalFactorization f = factor_rational(p);
  EXPECT_EQ(f.factors.size(), 3U);
  EXPECT_EQ(expand(f), p);
}

TEST(FactorRational, RandomProductsOfKnownIrreducibles) {
  // Cyclotomic polynomials, x^2 - prime, and Eisenstein polynomials are irreducible.
  std::vector<QPoly> pool{cyclotomic(5),          cyclotomic(7),          cyclotomic(8),
                          cyclotomic(9),          cyclotomic(12),         from_ints({-2, 0, 1}),
                          from_ints({-3, 0, 1}),  from_ints({-2, 0, 0, 1}), from_ints({3, 3, 0, 0, 1}),
                          from_ints({5, 0, 5, 0, 0, 1}), from_ints({-7, 1}), from_ints({4, 1})};
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<QPoly> chosen;
    QPoly p = QPoly::constant(1);
    for (int k = 0; k < 3; ++k) {
      chosen.push_back(pool[rng() % pool.size()]);
      p = p * chosen.back();
    }
    RationalFactorization expected{1, {}};
    for (const QPoly& q : chosen) expected.factors.push_back({q, 1});
    const RationalFactorization f = factor_rational(p);
    EXPECT_EQ(sorted_factors(f), sorted_factors(expected)) << p.to_string();
    EXPECT_EQ(expand(f), p);
  }
}

TEST(FactorCyclotomic, PhiTwelveSplitsOverQZeta12) {
  const QPoly p = from_ints({1, 0, -1, 0, 1});
  const std::vector<KPoly> f = factor_over_cyclotomic(p, 12);
  ASSERT_EQ(f.size(), 4U);
  // Oracle: the roots are the primitive 12th roots of unity.
  std::vector<CycScalar> roots;
  KPoly product = KPoly::constant(CycScalar(1));
  for (const KPoly& lin : f) {
    ASSERT_EQ(lin.degree(), 1);
    EXPECT_TRUE(lin.is_monic());
    roots.push_back(-lin.coeffs()[0]);
    product = product * lin;
  }
  for (long k : {1L, 5L, 7L, 11L}) {
    EXPECT_EQ(std::count(roots.begin(), roots.end(), CycScalar::zeta(12, k)), 1) << k;
  }
  EXPECT_EQ(product, to_cyclotomic(p));
}

TEST(FactorCyclotomic, FieldDecidesSplitting) {
  // x^2 + 1 is irreducible over Q(zeta_3) and splits over Q(zeta_4).
  const QPoly p = from_ints({1, 0, 1});
  EXPECT_EQ(factor_over_cyclotomic(p, 3).size(), 1U);
  EXPECT_EQ(factor_over_cyclotomic(p, 4).size(), 2U);
  // x^2 - 2 splits over Q(zeta_8) with roots +-(z + z^7).
  const std::vector<KPoly> f = factor_over_cyclotomic(from_ints({-2, 0, 1}), 8);
  ASSERT_EQ(f.size(), 2U);
  const CycScalar r = CycScalar::zeta(8) + CycScalar::zeta(8, 7);
  for (const KPoly& lin : f) {
    const CycScalar root = -lin.coeffs()[0];
    EXPECT_TRUE(root == r || root == -r);
  }
  EXPECT_THROW(factor_over_cyclotomic(from_ints({1, 2, 1}), 4), Error);
}

TEST(FactorCyclotomic, NormOfLinearPolynomial) {
  // Norm of x - zeta_3 is the minimal polynomial x^2 + x + 1.
  EXPECT_EQ(norm_polynomial(KPoly::linear(CycScalar::zeta(3)), 3), from_ints({1, 1, 1}));
  // Over Q(zeta_6) = Q(zeta_3) the same.
  EXPECT_EQ(norm_polynomial(KPoly::linear(CycScalar::zeta(6, 2)), 6), from_ints({1, 1, 1}));
}

// Oracle: exhaustive search over all fractions within the bound.
std::optional<Rational> brute_force_reconstruction(long r, long m) {
  long bound = 0;
  while ((bound + 1) * (bound + 1) * 2 <= m) ++bound;
  std::optional<Rational> found;
  for (long d = 1; d <= bound; ++d)
    for (long n = -bound; n <= bound; ++n) {
      if (std::gcd(n, d) != 1) continue;
      if ((((n - r * d) % m) + m) % m != 0) continue;
      const Rational q(n, d);
      if (found && *found != q) ADD_FAILURE() << "two reconstructions for " << r << " mod " << m;
      found = q;
    }
  return found;
}

TEST(RationalReconstruction, MatchesExhaustiveSearch) {
  for (long m : {13L, 29L, 101L, 257L, 1009L}) {
    for (long r = 0; r < m; ++r) {
      const auto got = rational_reconstruction(Integer(r), Integer(m));
      const auto want = brute_force_reconstruction(r, m);
      ASSERT_EQ(got.has_value(), want.has_value()) << r << " mod " << m;
      if (got) EXPECT_EQ(*got, *want) << r << " mod " << m;
    }
  }
}

TEST(RationalReconstruction, DocumentedCases) {
  EXPECT_EQ(rational_reconstruction(51, 101), Rational(1, 2));
  EXPECT_FALSE(rational_reconstruction(4, 13).has_value());
  // 8 exceeds the bound sqrt(101 / 2) and 8 is not n/d for any smaller n, d.
  EXPECT_FALSE(rational_reconstruction(8, 101).has_value());
}

}  // namespace
}  // namespace hopfkit
