#include <gtest/gtest.h>

#include <algorithm>
#include <array>

#include "hopfkit/characters.hpp"
#include "hopfkit/integrality.hpp"
#include "test_support.hpp"

namespace hopfkit {
namespace {

using testing::example;
using testing::examples;
using testing::session;

std::size_t find_index(const CharacterTable& t, const Vector& chi) {
  return static_cast<std::size_t>(std::find(t.characters.begin(), t.characters.end(), chi) - t.characters.begin());
}

TEST(Characters, GroupAlgebraOfC2) {
  const CharacterTable& t = session("kC2").characters();
  ASSERT_EQ(t.size(), 2U);
  EXPECT_LT(find_index(t, {CycScalar(1), CycScalar(1)}), 2U);
  EXPECT_LT(find_index(t, {CycScalar(1), CycScalar(-1)}), 2U);
}

TEST(Characters, S3MatchesTheClassicalTable) {
  const GroupTable g = builtin_group("S3");
  const CharacterTable& t = session("kS3").characters();
  // Rows on the classes of elements of order 1, 2, 3.
  std::vector<std::array<long, 3>> rows;
  for (const Vector& chi : t.characters) {
    std::array<std::optional<CycScalar>, 3> row;
    for (std::size_t x = 0; x < g.order(); ++x) {
      auto& slot = row[g.element_order(x) - 1];
      if (slot) EXPECT_EQ(*slot, chi[x]) << "not a class function";
      slot = chi[x];
    }
    std::array<long, 3> r{};
    for (int k = 0; k < 3; ++k) {
      ASSERT_TRUE(row[k]->is_rational());
      r[k] = row[k]->rational().get_num().get_si();
    }
    rows.push_back(r);
  }
  std::sort(rows.begin(), rows.end());
  const std::vector<std::array<long, 3>> classical{{1, -1, 1}, {1, 1, 1}, {2, 0, -1}};
  EXPECT_EQ(rows, classical);
}

TEST(Characters, OrthogonalityRelationsOnGroupAlgebras) {
  for (const char* name : {"Q8", "D4", "C2xC2", "S3"}) {
    const GroupTable g = builtin_group(name);
    const CharacterTable& t = session(std::string("k") + name).characters();
    ASSERT_EQ(t.size(), g.conjugacy_classes().size()) << name;
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = 0; b < t.size(); ++b) {
        CycScalar sum;
        for (std::size_t x = 0; x < g.order(); ++x) sum += t.characters[a][x] * t.characters[b][g.inverse[x]];
        EXPECT_EQ(sum, CycScalar(a == b ? static_cast<long>(g.order()) : 0L)) << name;
      }
  }
}

TEST(Characters, RegularCharacterIsDimTimesLambda) {
  for (const auto& [name, h] : examples()) {
    Session& s = session(name);
    const CharacterTable& t = s.characters();
    Vector regular(h.dim());
    for (std::size_t v = 0; v < t.size(); ++v) {
      regular = add(regular, scale(CycScalar(static_cast<long>(t.degrees[v])), t.characters[v]));
    }
    EXPECT_EQ(regular, scale(CycScalar(static_cast<long>(h.dim())), s.integrals().dual_integral)) << name;
    EXPECT_EQ(t.dual_pairing.rows(), t.size());
  }
}

TEST(Characters, CentralityInTheDual) {
  for (const char* name : {"kS3", "kQ8", "kC3"}) {
    for (const Vector& chi : session(name).characters().characters) EXPECT_TRUE(is_central_character(chi, example(name)));
  }
  // In k^S3 the characters are the group elements; only the identity is central.
  const CharacterTable& t = session("k^S3").characters();
  EXPECT_EQ(std::count_if(t.characters.begin(), t.characters.end(),
                          [](const Vector& chi) { return is_central_character(chi, example("k^S3")); }),
            1);
  EXPECT_TRUE(is_central_character(example("k^S3").counit(), example("k^S3")));
}

TEST(Characters, DoubleCentralityMatchesClassFunctionOracle) {
  // Oracle: chi in D(G)* = kG (x) k^G is central iff g -> chi(delta_g h) is a class
  // function for every h.
  const GroupTable g = builtin_group("S3");
  const std::size_t n = g.order();
  const CharacterTable& t = session("D(S3)").characters();
  std::vector<unsigned> central_degrees;
  for (std::size_t v = 0; v < t.size(); ++v) {
    bool oracle = true;
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t k = 0; k < n; ++k)
          oracle = oracle && t.characters[v][x * n + h] == t.characters[v][g.conjugate(x, k) * n + h];
    EXPECT_EQ(is_central_character(t.characters[v], example("D(S3)")), oracle) << t.labels[v];
    if (oracle) central_degrees.push_back(t.degrees[v]);
  }
  std::sort(central_degrees.begin(), central_degrees.end());
  EXPECT_EQ(central_degrees, (std::vector<unsigned>{1, 1, 2, 2}));
}

TEST(Fusion, CyclicGroupGivesTheGroupRing) {
  const FusionRing& r = session("kC3").fusion();
  ASSERT_EQ(r.size(), 3U);
  for (std::size_t v = 0; v < 3; ++v)
    for (std::size_t w = 0; w < 3; ++w) {
      Integer total = 0;
      for (std::size_t u = 0; u < 3; ++u) total += r.coefficients[v][w][u];
      EXPECT_EQ(total, 1);  // a product of group-likes is a single group-like
    }
  // Each character has order dividing 3: chi^3 = eps.
  const CharacterTable& t = session("kC3").characters();
  const HopfData& h = example("kC3");
  for (const Vector& chi : t.characters) EXPECT_EQ(convolve(convolve(chi, chi, h), chi, h), h.counit());
}

TEST(Fusion, StandardRepresentationOfS3) {
  const CharacterTable& t = session("kS3").characters();
  const FusionRing& r = session("kS3").fusion();
  std::size_t std2 = 0, sign = 0;
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (t.degrees[v] == 2) std2 = v;
    if (t.degrees[v] == 1 && v != r.unit) sign = v;
  }
  EXPECT_EQ(r.coefficients[std2][std2][r.unit], 1);
  EXPECT_EQ(r.coefficients[std2][std2][sign], 1);
  EXPECT_EQ(r.coefficients[std2][std2][std2], 1);
  EXPECT_EQ(r.coefficients[sign][sign][r.unit], 1);
  EXPECT_EQ(r.coefficients[sign][std2][std2], 1);
}

TEST(Fusion, InvariantsOnEveryExample) {
  for (const auto& [name, h] : examples()) {
    const CharacterTable& t = session(name).characters();
    const FusionRing& r = session(name).fusion();
    const std::size_t n = r.size();
    for (std::size_t v = 0; v < n; ++v) {
      EXPECT_EQ(r.dual[r.dual[v]], v) << name;  // duality is an involution
      for (std::size_t w = 0; w < n; ++w) {
        Integer dims = 0;
        for (std::size_t u = 0; u < n; ++u) {
          EXPECT_GE(r.coefficients[v][w][u], 0) << name;
          dims += r.coefficients[v][w][u] * t.degrees[u];
        }
        EXPECT_EQ(dims, Integer(t.degrees[v]) * t.degrees[w]) << name;  // dimension homomorphism
        // eps appears in V W exactly when W = V*
        EXPECT_EQ(r.coefficients[v][w][r.unit], w == r.dual[v] ? 1 : 0) << name;
      }
      const Poly<Rational>& p = r.char_polys[v];
      EXPECT_TRUE(p.is_monic());
      for (const Rational& c : p.coeffs()) EXPECT_TRUE(is_integer(c));
      EXPECT_TRUE(is_zero(evaluate_convolution(p, t.characters[v], h))) << name;
    }
  }
}

TEST(Fusion, SignCharacterSatisfiesXSquaredMinusOne) {
  const FusionRing& r = session("kC2").fusion();
  const std::size_t sign = r.unit == 0 ? 1 : 0;
  EXPECT_EQ(r.char_polys[sign], Poly<Rational>({Rational(-1), Rational(0), Rational(1)}));
}

TEST(CentralDecomposition, UnitAndIdempotents) {
  Session& s = session("D(C2)");
  const BlockDecomposition& dual = s.dual_blocks();
  const CentralDecomposition eps = central_decomposition(s.algebra().counit(), dual);
  for (const CycScalar& f : eps.values) EXPECT_TRUE(f.is_one());
  for (std::size_t j = 0; j < dual.size(); ++j) {
    const CentralDecomposition d = central_decomposition(dual.idempotents[j], dual);
    for (std::size_t i = 0; i < dual.size(); ++i) EXPECT_EQ(d.values[i], CycScalar(i == j ? 1L : 0L));
  }
}

TEST(CentralDecomposition, S3StandardCharacterValues) {
  Session& s = session("kS3");
  const CharacterTable& t = s.characters();
  const std::size_t std2 = static_cast<std::size_t>(std::find(t.degrees.begin(), t.degrees.end(), 2U) - t.degrees.begin());
  const CentralDecomposition d = central_decomposition(dual_antipode(s.algebra(), t.characters[std2]), s.dual_blocks());
  std::vector<long> values;
  for (const CycScalar& f : d.values) {
    EXPECT_TRUE(is_algebraic_integer(f).is_integer);
    values.push_back(f.rational().get_num().get_si());
  }
  std::sort(values.begin(), values.end());
  // chi_2 on the six group elements: 2 at e, 0 on transpositions, -1 on 3-cycles.
  EXPECT_EQ(values, (std::vector<long>{-1, -1, 0, 0, 0, 2}));
}

TEST(FMap, BasicIdentities) {
  Session& c2 = session("kC2");
  EXPECT_EQ(f_map(c2.algebra().counit(), c2.integrals(), c2.algebra()), c2.integrals().integral);
  EXPECT_EQ(f_map(c2.integrals().dual_integral, c2.integrals(), c2.algebra()), (Vector{CycScalar(1), CycScalar(0)}));
  for (const auto& [name, h] : examples()) {
    Session& s = session(name);
    EXPECT_EQ(rank(f_map_matrix(s.integrals(), h)), h.dim()) << name;
    const BlockDecomposition& b = s.blocks();
    for (std::size_t v = 0; v < b.size(); ++v) {
      const CycScalar ratio(Rational(static_cast<long>(h.dim())) / Rational(static_cast<long>(b.degrees[v])));
      EXPECT_EQ(f_map(dual_antipode(h, s.characters().characters[v]), s.integrals(), h),
                scale(ratio, b.idempotents[v]))
          << name;
    }
  }
}

}  // namespace
}  // namespace hopfkit
