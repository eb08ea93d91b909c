#pragma once

#include <string>
#include <string_view>

#include "hopfkit/cyclotomic.hpp"

namespace hopfkit {

/// Parse a scalar literal such as `3/2*z^2 - 1` or `-z + 1/3`, reading z as
/// zeta_order. Exponents may exceed phi(order); they are reduced.
/// Throws ParseError with a 1-based column (line reported as 0).
CycScalar parse_scalar(std::string_view text, unsigned order);

/// Literal form of `value` with z read as zeta_order.
inline std::string format_scalar(const CycScalar& value, unsigned order) { return value.to_string(order); }

}  // namespace hopfkit
