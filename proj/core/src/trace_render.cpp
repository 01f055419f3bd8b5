#include "histcomb/trace_render.hpp"

#include <sstream>

#include <json.hpp>

namespace histcomb {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kSquared = "²";
constexpr std::string_view kTimes = "·";
constexpr std::string_view kMinus = " − ";

Json derivation_json(const DerivationNode& node) {
  Json children = Json::array();
  for (const auto& child : node.children) children.push_back(derivation_json(*child));
  Json out;
  out["rule"] = to_string(node.rule);
  out["n"] = node.query.n;
  out["k"] = node.query.k;
  out["value"] = node.value.str();
  out["children"] = std::move(children);
  return out;
}

void derivation_text(const DerivationNode& node, std::size_t depth, std::ostringstream& out) {
  out << std::string(2 * depth, ' ') << "C(" << node.query.n << ',' << node.query.k
      << ") = " << node.value << " via " << to_string(node.rule) << '\n';
  for (const auto& child : node.children) derivation_text(*child, depth + 1, out);
}

Json square_json(const SquareStep& step) {
  Json out;
  out["rule"] = to_string(step.rule);
  out["operand"] = step.operand;
  out["value"] = step.value.str();
  out["sub"] = step.sub ? square_json(*step.sub) : Json(nullptr);
  return out;
}

void square_text(const SquareStep& step, std::ostringstream& out) {
  if (step.sub) square_text(*step.sub, out);
  out << step.operand << kSquared << " = ";
  switch (step.rule) {
    case SquareRule::kTable:
      break;
    case SquareRule::kThreeA:
      out << "10" << kTimes << step.sub->value << kMinus << step.sub->value << " = ";
      break;
    case SquareRule::kPlusOne:
      out << step.sub->value << " + " << 2 * BigInt(step.inner_operand()) << " + 1 = ";
      break;
    case SquareRule::kMinusOne:
      out << step.sub->value << kMinus << 2 * BigInt(step.inner_operand()) << " + 1 = ";
      break;
  }
  out << step.value << " (" << to_string(step.rule) << ")\n";
}

Json multiplication_json(const MultiplicationPlan& plan) {
  Json out;
  out["x"] = plan.x;
  out["y"] = plan.y;
  out["adjusted_y"] = plan.adjusted_y;
  out["a"] = plan.a;
  out["b"] = plan.b;
  out["correction"] = plan.correction.str();
  out["square_a"] = square_json(plan.square_a.root);
  out["square_b"] = square_json(plan.square_b.root);
  out["value"] = plan.value.str();
  return out;
}

}  // namespace

std::optional<RenderFormat> parse_render_format(std::string_view name) {
  if (name == "text") return RenderFormat::kText;
  if (name == "structured") return RenderFormat::kStructured;
  if (name == "none") return RenderFormat::kNone;
  return std::nullopt;
}

std::string render_derivation(const DerivationNode& node, RenderFormat format) {
  switch (format) {
    case RenderFormat::kText: {
      std::ostringstream out;
      derivation_text(node, 0, out);
      return out.str();
    }
    case RenderFormat::kStructured:
      return derivation_json(node).dump();
    case RenderFormat::kNone:
      break;
  }
  return {};
}

std::string render_square_plan(const SquarePlan& plan, RenderFormat format) {
  switch (format) {
    case RenderFormat::kText: {
      std::ostringstream out;
      square_text(plan.root, out);
      return out.str();
    }
    case RenderFormat::kStructured:
      return square_json(plan.root).dump();
    case RenderFormat::kNone:
      break;
  }
  return {};
}

std::string render_multiplication_plan(const MultiplicationPlan& plan, RenderFormat format) {
  switch (format) {
    case RenderFormat::kText: {
      std::ostringstream out;
      square_text(plan.square_a.root, out);
      square_text(plan.square_b.root, out);
      out << plan.x << kTimes << plan.y << " = ";
      if (plan.adjusted_y != plan.y) {
        out << plan.x << kTimes << plan.adjusted_y << kMinus << plan.x << " = ";
      }
      out << plan.a << kSquared << kMinus << plan.b << kSquared;
      if (plan.adjusted_y != plan.y) out << kMinus << plan.x;
      out << " = " << plan.square_a.root.value << kMinus << plan.square_b.root.value;
      if (plan.adjusted_y != plan.y) out << kMinus << plan.x;
      out << " = " << plan.value << '\n';
      return out.str();
    }
    case RenderFormat::kStructured:
      return multiplication_json(plan).dump();
    case RenderFormat::kNone:
      break;
  }
  return {};
}

std::string render_sum(std::uint64_t m, const BigInt& value, RenderFormat format) {
  switch (format) {
    case RenderFormat::kText: {
      std::ostringstream out;
      out << m << " times (" << m << "/2 + 1/2) = " << value << '\n';
      return out.str();
    }
    case RenderFormat::kStructured: {
      Json out;
      out["m"] = m;
      out["value"] = value.str();
      return out.dump();
    }
    case RenderFormat::kNone:
      break;
  }
  return {};
}

}  // namespace histcomb
