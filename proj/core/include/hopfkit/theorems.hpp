#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hopfkit/characters.hpp"
#include "hopfkit/integrality.hpp"

namespace hopfkit {

enum class ItemStatus { pass, fail, skipped };

using WitnessValue = std::variant<bool, long, std::string, std::vector<std::string>>;
/// Ordered key/value witness data; scalars use the exact literal grammar.
using Witness = std::vector<std::pair<std::string, WitnessValue>>;

struct ReportItem {
  std::string id;
  std::string statement;
  ItemStatus status = ItemStatus::fail;
  Witness witness;
};

struct VerificationReport {
  std::string algebra;
  std::size_t dim = 0;
  std::string suite;
  bool exploratory = false;  // excluded from the overall verdict
  std::vector<ReportItem> items;

  /// No item failed (skipped items do not count against the suite).
  bool passed() const;
};

/// Several suites on one algebra.
struct ReportDocument {
  std::string algebra;
  std::size_t dim = 0;
  std::vector<VerificationReport> suites;

  /// Every non-exploratory suite passed.
  bool overall() const;
};

VerificationReport verify_axioms(const HopfData& h, unsigned order);
VerificationReport verify_integrals(const HopfData& h, const IntegralPair& integrals, unsigned order);

/// Per block V: item A checks (dim H / dim V) e_V = (S* chi_V) -> Lambda and item B
/// checks (dim H / dim V) (e_V -> lambda) = chi_V.
VerificationReport verify_lemma1(const HopfData& h, const BlockDecomposition& blocks, const IntegralPair& integrals,
                                 const CharacterTable& table);

inline constexpr std::size_t kCorollaryExhaustiveBlocks = 8;
inline constexpr std::size_t kCorollarySamples = 64;

/// delta_M -> Lambda = (dim M) chi_M for every primitive central idempotent of H*,
/// and non-negative integral character coordinates of delta -> Lambda for sums
/// delta of those idempotents: every subset when there are at most
/// kCorollaryExhaustiveBlocks blocks, otherwise kCorollarySamples seeded draws.
VerificationReport verify_corollary(const HopfData& h, const BlockDecomposition& dual_blocks,
                                    const IntegralPair& integrals, const CharacterTable& dual_table,
                                    std::uint64_t seed);

/// For every block whose character is central in H*: divisibility of dim H,
/// integrality certificates of the central values f_i(S* chi_V), and integrality
/// of the H*-character coordinates of (S* chi_V) -> Lambda. Other blocks are
/// reported as skipped.
VerificationReport verify_proposition(const HopfData& h, const BlockDecomposition& blocks,
                                      const CharacterTable& table, const BlockDecomposition& dual_blocks,
                                      const IntegralPair& integrals, const CharacterTable& dual_table);

/// Bijectivity of f(phi) = phi -> Lambda, the subspace equalities f(C(H)) = Z(H)
/// and f(Z(H*)) = C(H*), and per block the integrality of the e_V coordinate of
/// f(S* chi_V) against divisibility of dim H by dim V.
VerificationReport verify_section4(const HopfData& h, const BlockDecomposition& blocks,
                                   const IntegralPair& integrals, const CharacterTable& table,
                                   const BlockDecomposition& dual_blocks, const CharacterTable& dual_table);

/// Degree table with divisibility and centrality; an item fails only when a
/// central-character block has a degree not dividing dim H.
VerificationReport kaplansky_report(const HopfData& h, const BlockDecomposition& blocks,
                                    const CharacterTable& table);

/// Exploratory: integrality of f on a lattice basis of the center of the fusion ring.
VerificationReport explore_central_fusion(const HopfData& h, const CharacterTable& table, const FusionRing& ring,
                                          const BlockDecomposition& blocks, const IntegralPair& integrals);

/// Negative control: swap two distinct coordinates of one idempotent.
BlockDecomposition corrupt_idempotent(BlockDecomposition blocks, std::size_t block);

}  // namespace hopfkit
