#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/theorems.hpp"

namespace hopfkit {

enum class OutputFormat { text, json };

struct SessionConfig {
  unsigned cyclotomic_order = 0;  // 0: take it from the input algebra
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::text;
  std::string output;  // empty: standard output
};

/// Lazily computed pipeline stages for one algebra and its dual, each cached
/// after first use.
class Session {
 public:
  Session(HopfData algebra, SessionConfig config);

  const SessionConfig& config() const noexcept { return config_; }
  unsigned order() const noexcept { return order_; }

  const HopfData& algebra() const noexcept { return algebra_; }
  const HopfData& dual();
  const IntegralPair& integrals();
  const IntegralPair& dual_integrals();
  const BlockDecomposition& blocks();
  const BlockDecomposition& dual_blocks();
  const CharacterTable& characters();
  const CharacterTable& dual_characters();
  const FusionRing& fusion();

  /// Suite names in report order.
  static const std::vector<std::string>& suite_names();

  /// Runs one suite. A pipeline error becomes a single failing item.
  VerificationReport run_suite(const std::string& name);
  ReportDocument run(const std::vector<std::string>& suites);

 private:
  HopfData algebra_;
  SessionConfig config_;
  unsigned order_;
  std::optional<HopfData> dual_;
  std::optional<IntegralPair> integrals_, dual_integrals_;
  std::optional<BlockDecomposition> blocks_, dual_blocks_;
  std::optional<CharacterTable> characters_, dual_characters_;
  std::optional<FusionRing> fusion_;
};

}  // namespace hopfkit
