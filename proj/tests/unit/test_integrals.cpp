#include <gtest/gtest.h>

#include "hopfkit/error.hpp"
#include "hopfkit/hopf_io.hpp"
#include "hopfkit/integrals.hpp"
#include "test_support.hpp"

namespace hopfkit {
namespace {

using testing::example;
using testing::examples;

Vector constant_vector(std::size_t d, const Rational& c) { return Vector(d, CycScalar(c)); }

TEST(Integrals, GroupAlgebraOfC2) {
  const IntegralPair in = compute_integrals(example("kC2"));
  EXPECT_EQ(in.integral, (Vector{CycScalar(1), CycScalar(1)}));  // e + g
  EXPECT_EQ(in.dual_integral, (Vector{CycScalar(1), CycScalar(0)}));  // delta_e
  EXPECT_EQ(in.integral_scaled, (Vector{CycScalar(Rational(1, 2)), CycScalar(Rational(1, 2))}));
  EXPECT_TRUE(in.semisimple && in.cosemisimple && in.two_sided);
}

TEST(Integrals, GroupAndFunctionAlgebrasHaveClassicalIntegrals) {
  for (const char* g : {"S3", "Q8", "C2xC2"}) {
    const GroupTable group = builtin_group(g);
    const std::size_t n = group.order();
    // kG: Lambda = sum of all g, lambda = delta_e
    const IntegralPair kg = compute_integrals(example(std::string("k") + g));
    EXPECT_EQ(kg.integral, constant_vector(n, 1)) << g;
    EXPECT_EQ(kg.dual_integral, basis_vector(n, group.identity)) << g;
    // k^G: Lambda = |G| delta_e, lambda = (1/|G|) sum of all g
    const IntegralPair fg = compute_integrals(example(std::string("k^") + g));
    EXPECT_EQ(fg.integral, scale(CycScalar(static_cast<long>(n)), basis_vector(n, group.identity))) << g;
    EXPECT_EQ(fg.dual_integral, constant_vector(n, Rational(1, static_cast<long>(n)))) << g;
  }
}

TEST(Integrals, NormalizationHoldsOnEveryExample) {
  for (const auto& [name, h] : examples()) {
    const IntegralPair in = compute_integrals(h);
    EXPECT_TRUE(pair(in.dual_integral, h.unit()).is_one()) << name;
    EXPECT_TRUE(pair(in.dual_integral, in.integral).is_one()) << name;
    EXPECT_EQ(pair(h.counit(), in.integral), CycScalar(static_cast<long>(h.dim()))) << name;
    for (std::size_t i = 0; i < h.dim(); ++i) {
      const Vector b = basis_vector(h.dim(), i);
      EXPECT_EQ(multiply(h, b, in.integral), scale(h.counit()[i], in.integral)) << name << " basis " << i;
    }
    EXPECT_TRUE(in.two_sided) << name;
    EXPECT_EQ(left_integral_space(h).size(), 1U) << name;
  }
}

TEST(Integrals, DualIntegralsSwapRoles) {
  // The integrals of H* are lambda* = Lambda / dim H and Lambda* = (dim H) lambda.
  for (const char* name : {"kS3", "D(C2)", "kS3(x)k^C2"}) {
    const HopfData& h = example(name);
    const IntegralPair in = compute_integrals(h);
    const IntegralPair dual = compute_integrals(dualize(h));
    EXPECT_EQ(dual.dual_integral, in.integral_scaled) << name;
    EXPECT_EQ(dual.integral, scale(CycScalar(static_cast<long>(h.dim())), in.dual_integral)) << name;
  }
}

TEST(Integrals, SweedlerAlgebraIsNotSemisimple) {
  const HopfData h4 = read_hopf_file(std::string(HOPFKIT_TEST_DATA_DIR) + "/sweedler.hopf");
  EXPECT_THROW(compute_integrals(h4), NotSemisimple);
  // The integral space is still a line; only the normalization fails.
  EXPECT_EQ(left_integral_space(h4).size(), 1U);
}

}  // namespace
}  // namespace hopfkit
