#include "histcomb/medieval_arith.hpp"

#include <algorithm>
#include <array>

namespace histcomb {

namespace {

constexpr std::array<std::uint64_t, 10> kSquareTable{0, 1, 4, 9, 16, 25, 36, 49, 64, 81};

constexpr std::array<std::pair<SquareRule, std::string_view>, 4> kRuleNames{{
    {SquareRule::kTable, "Table"},
    {SquareRule::kThreeA, "ThreeA"},
    {SquareRule::kPlusOne, "PlusOne"},
    {SquareRule::kMinusOne, "MinusOne"},
}};

std::shared_ptr<const SquareStep> build_step(std::uint64_t n, std::uint64_t& depth) {
  ++depth;
  auto step = std::make_shared<SquareStep>();
  step->operand = n;
  if (n < kSquareTable.size()) {
    step->rule = SquareRule::kTable;
    step->value = kSquareTable[n];
    return step;
  }
  switch (n % 3) {
    case 0: {
      step->rule = SquareRule::kThreeA;
      step->sub = build_step(n / 3, depth);
      const BigInt& a2 = step->sub->value;
      step->value = 10 * a2 - a2;
      break;
    }
    case 1: {
      const std::uint64_t m = n - 1;
      step->rule = SquareRule::kPlusOne;
      step->sub = build_step(m, depth);
      step->value = step->sub->value + 2 * BigInt(m) + 1;
      break;
    }
    default: {
      const std::uint64_t m = n + 1;
      step->rule = SquareRule::kMinusOne;
      step->sub = build_step(m, depth);
      step->value = step->sub->value - 2 * BigInt(m) + 1;
      break;
    }
  }
  return step;
}

}  // namespace

std::string_view to_string(SquareRule rule) {
  for (const auto& [r, name] : kRuleNames) {
    if (r == rule) return name;
  }
  return "Unknown";
}

std::optional<SquareRule> parse_square_rule(std::string_view name) {
  for (const auto& [r, n] : kRuleNames) {
    if (n == name) return r;
  }
  return std::nullopt;
}

std::uint64_t SquareStep::inner_operand() const {
  switch (rule) {
    case SquareRule::kThreeA: return operand / 3;
    case SquareRule::kPlusOne: return operand - 1;
    case SquareRule::kMinusOne: return operand + 1;
    case SquareRule::kTable: break;
  }
  return operand;
}

std::uint64_t square_depth_bound(std::uint64_t n) {
  std::uint64_t exponent = 0;
  for (std::uint64_t power = 1; power < std::max<std::uint64_t>(n, 1); power *= 3) ++exponent;
  return 2 * exponent + 2;
}

SquarePlan square_plan(std::uint64_t n, const Limits& limits) {
  check_limit("n", n, limits);
  SquarePlan plan;
  plan.target = n;
  plan.root = *build_step(n, plan.depth);
  return plan;
}

MultiplicationPlan multiply_plan(std::uint64_t x, std::uint64_t y, const Limits& limits) {
  check_limit("x", x, limits);
  check_limit("y", y, limits);
  MultiplicationPlan plan;
  plan.x = x;
  plan.y = y;
  plan.adjusted_y = (x % 2 == y % 2) ? y : y + 1;
  plan.correction = plan.adjusted_y == y ? BigInt(0) : -BigInt(x);
  plan.a = (x + plan.adjusted_y) / 2;
  plan.b = (x > plan.adjusted_y ? x - plan.adjusted_y : plan.adjusted_y - x) / 2;
  // a and b may sit just above n_max when y was adjusted; the squares
  // themselves are not limited.
  Limits inner = limits;
  inner.n_max = std::max({limits.n_max, plan.a, plan.b});
  plan.square_a = square_plan(plan.a, inner);
  plan.square_b = square_plan(plan.b, inner);
  plan.value = plan.square_a.root.value - plan.square_b.root.value + plan.correction;
  return plan;
}

}  // namespace histcomb
