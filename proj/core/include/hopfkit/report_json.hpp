#pragma once

#include <string>
#include <vector>

#include "hopfkit/theorems.hpp"

namespace hopfkit {

/// Deterministic JSON with the fixed key set
/// {algebra, dim, suites: [{name, items: [{id, statement, pass, witness}]}], overall}.
/// Skipped items carry "pass": null.
std::string report_to_json(const ReportDocument& doc);

/// Human-readable summary, one line per item.
std::string report_to_text(const ReportDocument& doc);

/// Character table, centrality flags, and fusion tensor as JSON.
std::string characters_to_json(const HopfData& h, const CharacterTable& table, const std::vector<bool>& central,
                               const FusionRing& ring, unsigned order);

}  // namespace hopfkit
