#include <gtest/gtest.h>

#include <algorithm>

#include "hopfkit/error.hpp"
#include "hopfkit/theorems.hpp"
#include "hopfkit/wedderburn.hpp"
#include "test_support.hpp"

namespace hopfkit {
namespace {

using testing::example;
using testing::examples;
using testing::session;

std::vector<unsigned> sorted(std::vector<unsigned> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Classical irreducible degrees of the small groups that occur as centralizers.
std::vector<unsigned> classical_degrees(const GroupTable& g, const std::vector<std::size_t>& subgroup) {
  bool abelian = true;
  for (std::size_t a : subgroup)
    for (std::size_t b : subgroup) abelian = abelian && g.mul(a, b) == g.mul(b, a);
  if (abelian) return std::vector<unsigned>(subgroup.size(), 1);
  if (subgroup.size() == 6) return {1, 1, 2};
  if (subgroup.size() == 8) return {1, 1, 1, 1, 2};
  ADD_FAILURE() << "no classical table for a group of order " << subgroup.size();
  return {};
}

// Oracle: irreducibles of D(G) are indexed by a conjugacy class C and an irreducible
// representation of the centralizer of a point of C; the degree is |C| times its degree.
std::vector<unsigned> double_degrees(const GroupTable& g) {
  std::vector<unsigned> out;
  for (const auto& cls : g.conjugacy_classes()) {
    for (unsigned d : classical_degrees(g, g.centralizer(cls.front()))) {
      out.push_back(static_cast<unsigned>(cls.size()) * d);
    }
  }
  return sorted(out);
}

TEST(Wedderburn, DegreesOfTheExamples) {
  const std::map<std::string, std::vector<unsigned>> want{
      {"kC2", {1, 1}},
      {"kS3", {1, 1, 2}},
      {"kQ8", {1, 1, 1, 1, 2}},
      {"kD4", {1, 1, 1, 1, 2}},
      {"k^S3", {1, 1, 1, 1, 1, 1}},
      {"D(S3)", {1, 1, 2, 2, 2, 2, 3, 3}},
      {"kS3(x)k^C2", {1, 1, 1, 1, 2, 2}},
  };
  for (const auto& [name, degrees] : want) {
    const BlockDecomposition& b = session(name).blocks();
    EXPECT_EQ(sorted(b.degrees), degrees) << name;
    EXPECT_EQ(b.size(), b.center_basis.size()) << name;
  }
}

TEST(Wedderburn, DoubleDegreesMatchTheCentralizerConstruction) {
  for (const char* g : {"C2", "S3"}) {
    const GroupTable group = builtin_group(g);
    EXPECT_EQ(sorted(session(std::string("D(") + g + ")").blocks().degrees), double_degrees(group)) << g;
  }
  EXPECT_EQ(double_degrees(builtin_group("S3")), (std::vector<unsigned>{1, 1, 2, 2, 2, 2, 3, 3}));
}

TEST(Wedderburn, EveryIdempotentSystemVerifiesExactly) {
  for (const auto& [name, h] : examples()) {
    const BlockDecomposition& b = session(name).blocks();
    unsigned long squares = 0;
    for (unsigned d : b.degrees) squares += static_cast<unsigned long>(d) * d;
    EXPECT_EQ(squares, h.dim()) << name;
    for (const Check& c : verify_blocks(h, b.idempotents, b.degrees)) EXPECT_TRUE(c.pass) << name << ": " << c.name;
  }
}

TEST(Wedderburn, GroupAlgebraOfC2) {
  const BlockDecomposition& b = session("kC2").blocks();
  const CycScalar half(Rational(1, 2));
  EXPECT_EQ(b.idempotents.size(), 2U);
  const Vector plus{half, half}, minus{half, -half};
  EXPECT_TRUE(std::find(b.idempotents.begin(), b.idempotents.end(), plus) != b.idempotents.end());
  EXPECT_TRUE(std::find(b.idempotents.begin(), b.idempotents.end(), minus) != b.idempotents.end());
}

TEST(Wedderburn, IdempotentsDoNotDependOnTheSeed) {
  for (const char* name : {"kS3", "kQ8", "D(C2)", "k^D4"}) {
    const HopfData& h = example(name);
    const BlockDecomposition a = primitive_idempotents(h, h.cyclotomic_order(), 0);
    for (std::uint64_t seed : {1ULL, 2ULL, 12345ULL}) {
      const BlockDecomposition b = primitive_idempotents(h, h.cyclotomic_order(), seed);
      EXPECT_EQ(a.idempotents, b.idempotents) << name << " seed " << seed;
    }
  }
}

TEST(Wedderburn, CenterDimensionsCountConjugacyClasses) {
  for (const char* g : {"S3", "D4", "Q8"}) {
    EXPECT_EQ(center(example(std::string("k") + g)).size(), builtin_group(g).conjugacy_classes().size()) << g;
    EXPECT_EQ(center(example(std::string("k^") + g)).size(), builtin_group(g).order()) << g;
  }
}

TEST(Wedderburn, CyclicGroupNeedsRootsOfUnity) {
  const HopfData& h = example("kC3");
  EXPECT_THROW(primitive_idempotents(h, 1, 0), FieldTooSmall);
  EXPECT_THROW(primitive_idempotents(h, 2, 0), FieldTooSmall);
  EXPECT_EQ(primitive_idempotents(h, 6, 0).size(), 3U);
  // Q(zeta_3) suffices; each idempotent has coefficient 1/3 on the identity.
  const BlockDecomposition b = primitive_idempotents(h, 3, 0);
  for (const Vector& e : b.idempotents) EXPECT_EQ(e[0], CycScalar(Rational(1, 3)));
}

TEST(Wedderburn, CorruptedIdempotentsFailVerification) {
  const HopfData& h = example("kS3");
  const BlockDecomposition bad = corrupt_idempotent(session("kS3").blocks(), 2);
  const auto checks = verify_blocks(h, bad.idempotents, bad.degrees);
  EXPECT_TRUE(std::any_of(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

TEST(Wedderburn, BlockDegreesRejectNonIdempotentInput) {
  const HopfData& h = example("kS3");
  // 2 * 1 has trace 12, not a square.
  EXPECT_THROW(block_degrees(h, std::vector<Vector>{scale(CycScalar(2), h.unit())}), VerificationFailure);
}

}  // namespace
}  // namespace hopfkit
