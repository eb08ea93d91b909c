#pragma once

#include <vector>

#include "hopfkit/integrals.hpp"
#include "hopfkit/wedderburn.hpp"

namespace hopfkit {

/// Irreducible characters chi_V of H as linear forms (elements of H* in the
/// dual basis), aligned with the blocks they were computed from.
struct CharacterTable {
  std::vector<Vector> characters;
  std::vector<unsigned> degrees;
  std::vector<std::string> labels;
  Matrix<CycScalar> dual_pairing;  // (V, W) -> <chi_V, e_W>

  std::size_t size() const noexcept { return characters.size(); }
};

/// chi_V = (dim H / dim V) (e_V -> lambda), cross-checked against the blocks.
/// Throws VerificationFailure naming the first inconsistent block.
CharacterTable irreducible_characters(const HopfData& h, const BlockDecomposition& blocks,
                                      const IntegralPair& integrals);

/// chi commutes with every dual basis vector under convolution.
bool is_central_character(const Vector& chi, const HopfData& h);

/// The Grothendieck ring on the irreducible characters.
struct FusionRing {
  std::vector<std::string> labels;
  /// chi_V chi_W = sum_U coefficients[V][W][U] chi_U
  std::vector<std::vector<std::vector<Integer>>> coefficients;
  /// V -> V*, from the antipode of H*
  std::vector<std::size_t> dual;
  /// Index of the trivial character eps.
  std::size_t unit = 0;
  /// Characteristic polynomial of left multiplication by chi_V on the ring.
  std::vector<Poly<Rational>> char_polys;

  std::size_t size() const noexcept { return labels.size(); }
  /// Left multiplication matrix of chi_V: entry (U, W) = coefficients[V][W][U].
  Matrix<Rational> fusion_matrix(std::size_t v) const;
};

/// Throws VerificationFailure on a non-integral or negative coefficient, a
/// missing dual, or a characteristic polynomial that does not annihilate chi_V.
FusionRing fusion_ring(const CharacterTable& table, const HopfData& h);

/// p(phi) in H* under convolution.
Vector evaluate_convolution(const Poly<Rational>& p, const Vector& phi, const HopfData& h);

/// Coordinates of a central linear form in the basis of primitive central idempotents of H*.
struct CentralDecomposition {
  std::vector<Vector> delta;
  std::vector<CycScalar> values;
};

/// Throws VerificationFailure if zeta is not in the span of the dual blocks.
CentralDecomposition central_decomposition(const Vector& zeta, const BlockDecomposition& dual_blocks);

/// f(phi) = phi -> Lambda.
Vector f_map(const Vector& phi, const IntegralPair& integrals, const HopfData& h);

/// Matrix of f in the dual basis of H* and the basis of H.
Matrix<CycScalar> f_map_matrix(const IntegralPair& integrals, const HopfData& h);

}  // namespace hopfkit
