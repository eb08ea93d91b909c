#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "hopfkit/hopf.hpp"

namespace hopfkit {

/// Parse the `.hopf` text format:
///
///   hopf <name>
///   dim <d>
///   cyclotomic <N>
///   MULT        lines `i j k <scalar>`
///   COMULT      lines `i j k <scalar>`
///   UNIT        lines `k <scalar>`
///   COUNIT      lines `k <scalar>`
///   ANTIPODE    lines `i j <scalar>`
///
/// Indices are zero-based, omitted entries are zero, `#` starts a comment.
/// Throws ParseError with the offending line and column.
HopfData parse_hopf(std::string_view text);
HopfData read_hopf_file(const std::string& path);

/// Canonical serialization; only nonzero entries are written, in index order.
std::string format_hopf(const HopfData& h);
void write_hopf_file(const HopfData& h, const std::string& path);

}  // namespace hopfkit
