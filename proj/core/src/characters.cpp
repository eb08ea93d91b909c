#include "hopfkit/characters.hpp"

#include "hopfkit/error.hpp"

namespace hopfkit {

CharacterTable irreducible_characters(const HopfData& h, const BlockDecomposition& blocks,
                                      const IntegralPair& integrals) {
  const Rational dim_h(static_cast<long>(h.dim()));
  CharacterTable table;
  table.degrees = blocks.degrees;
  table.labels = blocks.labels;
  for (std::size_t v = 0; v < blocks.size(); ++v) {
    const Rational factor = dim_h / Rational(static_cast<long>(blocks.degrees[v]));
    table.characters.push_back(
        scale(CycScalar(factor), hit_act_alg_on_dual(blocks.idempotents[v], integrals.dual_integral, h)));
  }

  const std::size_t r = blocks.size();
  table.dual_pairing = Matrix<CycScalar>(r, r);
  for (std::size_t v = 0; v < r; ++v) {
    const CycScalar deg(static_cast<long>(table.degrees[v]));
    if (pair(table.characters[v], h.unit()) != deg) {
      throw VerificationFailure("character of " + table.labels[v] + " does not take the value dim V at 1");
    }
    for (std::size_t w = 0; w < r; ++w) {
      table.dual_pairing(v, w) = pair(table.characters[v], blocks.idempotents[w]);
      if (table.dual_pairing(v, w) != (v == w ? deg : CycScalar())) {
        throw VerificationFailure("character of " + table.labels[v] + " pairs wrongly with the idempotent of " +
                                  table.labels[w]);
      }
    }
  }
  return table;
}

bool is_central_character(const Vector& chi, const HopfData& h) {
  for (std::size_t j = 0; j < h.dim(); ++j) {
    const Vector phi = basis_vector(h.dim(), j);
    if (convolve(chi, phi, h) != convolve(phi, chi, h)) return false;
  }
  return true;
}

Matrix<Rational> FusionRing::fusion_matrix(std::size_t v) const {
  const std::size_t r = size();
  Matrix<Rational> m(r, r);
  for (std::size_t w = 0; w < r; ++w)
    for (std::size_t u = 0; u < r; ++u) m(u, w) = Rational(coefficients[v][w][u]);
  return m;
}

Vector evaluate_convolution(const Poly<Rational>& p, const Vector& phi, const HopfData& h) {
  Vector acc(h.dim());
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    acc = add(convolve(acc, phi, h), scale(CycScalar(p.coeffs()[i]), h.counit()));
  }
  return acc;
}

FusionRing fusion_ring(const CharacterTable& table, const HopfData& h) {
  const std::size_t r = table.size();
  const std::size_t d = h.dim();
  FusionRing ring;
  ring.labels = table.labels;

  std::vector<Vector> products;
  products.reserve(r * r);
  for (std::size_t v = 0; v < r; ++v)
    for (std::size_t w = 0; w < r; ++w) products.push_back(convolve(table.characters[v], table.characters[w], h));

  const auto basis = Matrix<CycScalar>::from_columns(std::span<const Vector>(table.characters), d);
  const auto solved = rref_solve(basis, Matrix<CycScalar>::from_columns(std::span<const Vector>(products), d));
  if (!solved || solved->kernel_dim != 0) {
    throw VerificationFailure("character products leave the span of the irreducible characters");
  }
  ring.coefficients.assign(r, std::vector<std::vector<Integer>>(r, std::vector<Integer>(r)));
  for (std::size_t v = 0; v < r; ++v)
    for (std::size_t w = 0; w < r; ++w)
      for (std::size_t u = 0; u < r; ++u) {
        const CycScalar& c = solved->particular(u, v * r + w);
        if (!c.is_rational() || !is_integer(c.rational()) || sgn(c.rational()) < 0) {
          throw VerificationFailure("fusion coefficient " + c.to_string() + " of " + table.labels[v] + " * " +
                                    table.labels[w] + " on " + table.labels[u] + " is not a non-negative integer");
        }
        ring.coefficients[v][w][u] = c.rational().get_num();
      }

  bool found_unit = false;
  for (std::size_t v = 0; v < r; ++v) {
    if (table.characters[v] == h.counit()) {
      ring.unit = v;
      found_unit = true;
    }
  }
  if (!found_unit) throw VerificationFailure("the counit is not among the irreducible characters");

  for (std::size_t v = 0; v < r; ++v) {
    const Vector s = dual_antipode(h, table.characters[v]);
    std::size_t match = r;
    for (std::size_t u = 0; u < r && match == r; ++u)
      if (table.characters[u] == s) match = u;
    if (match == r) throw VerificationFailure("S* of the character of " + table.labels[v] + " is not irreducible");
    ring.dual.push_back(match);
  }

  for (std::size_t v = 0; v < r; ++v) {
    const Poly<Rational> p = char_min_poly(ring.fusion_matrix(v)).characteristic;
    if (!is_zero(evaluate_convolution(p, table.characters[v], h))) {
      throw VerificationFailure("fusion characteristic polynomial of " + table.labels[v] +
                                " does not annihilate its character");
    }
    ring.char_polys.push_back(p);
  }
  return ring;
}

CentralDecomposition central_decomposition(const Vector& zeta, const BlockDecomposition& dual_blocks) {
  const auto c = coordinates<CycScalar>(std::span<const Vector>(dual_blocks.idempotents), zeta);
  if (!c) throw VerificationFailure("linear form is not in the span of the central idempotents of H*");
  return {dual_blocks.idempotents, *c};
}

Vector f_map(const Vector& phi, const IntegralPair& integrals, const HopfData& h) {
  return hit_act_dual_on_alg(phi, integrals.integral, h);
}

Matrix<CycScalar> f_map_matrix(const IntegralPair& integrals, const HopfData& h) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < h.dim(); ++j) cols.push_back(f_map(basis_vector(h.dim(), j), integrals, h));
  return Matrix<CycScalar>::from_columns(std::span<const Vector>(cols), h.dim());
}

}  // namespace hopfkit
