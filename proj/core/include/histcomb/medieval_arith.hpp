#ifndef HISTCOMB_MEDIEVAL_ARITH_HPP
#define HISTCOMB_MEDIEVAL_ARITH_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>

#include "histcomb/common.hpp"

namespace histcomb {

enum class SquareRule {
  kTable,     // memorized square of 0..9
  kThreeA,    // (3a)^2 = 10a^2 - a^2
  kPlusOne,   // (m+1)^2 = m^2 + 2m + 1
  kMinusOne,  // (m-1)^2 = m^2 - 2m + 1
};

std::string_view to_string(SquareRule rule);
std::optional<SquareRule> parse_square_rule(std::string_view name);

struct SquareStep {
  SquareRule rule = SquareRule::kTable;
  std::uint64_t operand = 0;
  BigInt value;
  // The step computing the inner square; null for kTable.
  std::shared_ptr<const SquareStep> sub;

  // Operand whose square `sub` supplies: operand/3, operand-1 or operand+1.
  std::uint64_t inner_operand() const;
};

struct SquarePlan {
  std::uint64_t target = 0;
  SquareStep root;
  std::uint64_t depth = 0;  // number of steps in the chain, root included
};

// Upper bound on SquarePlan::depth: 2*ceil(log3(max(n,1))) + 2.
std::uint64_t square_depth_bound(std::uint64_t n);

// Operand 0..9 comes from the table; otherwise dispatch on n mod 3:
// 0 -> ThreeA on n/3, 1 -> PlusOne from n-1, 2 -> MinusOne from n+1.
SquarePlan square_plan(std::uint64_t n, const Limits& limits = {});

struct MultiplicationPlan {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::uint64_t adjusted_y = 0;  // y, or y + 1 when x and y differ in parity
  std::uint64_t a = 0;           // (x + adjusted_y) / 2
  std::uint64_t b = 0;           // |x - adjusted_y| / 2
  BigInt correction;             // 0, or -x when y was adjusted
  SquarePlan square_a;
  SquarePlan square_b;
  BigInt value;                  // a^2 - b^2 + correction
};

// x*y by the difference of two squares; x*y = x*(y+1) - x for mixed parity.
MultiplicationPlan multiply_plan(std::uint64_t x, std::uint64_t y, const Limits& limits = {});

}  // namespace histcomb

#endif  // HISTCOMB_MEDIEVAL_ARITH_HPP
