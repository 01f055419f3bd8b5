#ifndef HISTCOMB_TRACE_RENDER_HPP
#define HISTCOMB_TRACE_RENDER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "histcomb/combinatorics.hpp"
#include "histcomb/medieval_arith.hpp"

namespace histcomb {

enum class RenderFormat { kText, kStructured, kNone };

std::optional<RenderFormat> parse_render_format(std::string_view name);

// Version of the structured schemas below. Bump on any change to field names,
// field order or nesting.
//
//   derivation:     {"rule", "n", "k", "value", "children": [derivation...]}
//   square step:    {"rule", "operand", "value", "sub": square step | null}
//   multiplication: {"x", "y", "adjusted_y", "a", "b", "correction",
//                    "square_a": square step, "square_b": square step, "value"}
//
// Values (and the correction) are decimal strings; n, k, operand, x, y,
// adjusted_y, a and b are JSON numbers.
inline constexpr int kStructuredSchemaVersion = 1;

// Text: one line per node, "C(n,k) = value via Rule", two spaces of indent per
// level. Structured: compact JSON with no trailing newline.
std::string render_derivation(const DerivationNode& node, RenderFormat format);

// Text: one line per step, innermost first, e.g.
//   4² = 16 (Table)
//   12² = 10·16 − 16 = 144 (ThreeA)
std::string render_square_plan(const SquarePlan& plan, RenderFormat format);

// Text: both square plans, then the combining line.
std::string render_multiplication_plan(const MultiplicationPlan& plan, RenderFormat format);

// Text: "m times (m/2 + 1/2) = value". Structured: {"m", "value"}.
std::string render_sum(std::uint64_t m, const BigInt& value, RenderFormat format);

}  // namespace histcomb

#endif  // HISTCOMB_TRACE_RENDER_HPP
