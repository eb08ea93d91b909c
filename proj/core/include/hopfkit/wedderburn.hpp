#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hopfkit/hopf.hpp"
#include "hopfkit/poly.hpp"

namespace hopfkit {

/// Centrally primitive idempotents e_V of a split semisimple algebra, one per
/// irreducible module V, with the block degrees dim V.
struct BlockDecomposition {
  std::vector<Vector> center_basis;
  std::vector<Vector> idempotents;
  std::vector<unsigned> degrees;
  std::vector<std::string> labels;
  unsigned cyclotomic_order = 1;

  // splitting witness, aligned with idempotents: e_V is the eigenprojection of
  // a primitive element of its rational block for the root `eigenvalues[V]`
  // of the irreducible `field_polynomials[V]`.
  std::vector<Poly<Rational>> field_polynomials;
  std::vector<CycScalar> eigenvalues;
  std::vector<Vector> splitting_elements;  // the draws that refined the blocks
  unsigned attempts = 0;
  std::vector<Check> checks;

  std::size_t size() const noexcept { return idempotents.size(); }
};

/// Basis of Z(H) = {z : z b_i = b_i z for all i}.
std::vector<Vector> center(const HopfData& h);

inline constexpr unsigned kSplittingRetries = 32;

/// Split Z(H) into primitive idempotents over Q(zeta_order).
///
/// Central elements with coefficients in {-3, ..., 3} on the center basis are
/// drawn from a PRNG seeded with `seed`. Each draw refines the current rational
/// blocks through the rational factorization of its minimal polynomial, until
/// every block is a field generated by the draw. Each field block is then split
/// by Lagrange interpolation at the roots of its polynomial in Q(zeta_order).
/// Blocks are ordered by degree, then by idempotent coordinates.
///
/// Throws FieldTooSmall if an eigenvalue lies outside Q(zeta_order),
/// RetriesExhausted if no splitting element is found, and VerificationFailure
/// if the resulting system fails an exact check.
BlockDecomposition primitive_idempotents(const HopfData& h, unsigned order, std::uint64_t seed,
                                         const std::string& label_prefix = "V");

/// dim V = sqrt(trace of left multiplication by e_V on H).
std::vector<unsigned> block_degrees(const HopfData& h, std::span<const Vector> idempotents);

/// Exact checks of a candidate idempotent system: orthogonality, idempotence,
/// completeness, centrality, and sum of squared degrees.
std::vector<Check> verify_blocks(const HopfData& h, std::span<const Vector> idempotents,
                                 std::span<const unsigned> degrees);

}  // namespace hopfkit
