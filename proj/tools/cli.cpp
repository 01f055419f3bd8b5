#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "histcomb/combinatorics.hpp"
#include "histcomb/josephus.hpp"
#include "histcomb/medieval_arith.hpp"
#include "histcomb/oracles.hpp"
#include "histcomb/trace_render.hpp"

namespace histcomb::cli {

namespace {

using Json = nlohmann::ordered_json;

// Raised for flag combinations CLI11 cannot express; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) items.push_back(item);
  if (!csv.empty() && csv.back() == ',') items.emplace_back();
  return items;
}

std::vector<std::string> canonical_planets(const std::string& csv) {
  std::vector<std::string> result;
  std::set<std::string> seen;
  for (auto& name : split_csv(csv)) {
    const auto key = lower(name);
    for (const auto& classical : classical_planets()) {
      if (lower(classical) == key) name = classical;
    }
    if (!key.empty() && !seen.insert(key).second) {
      throw InvalidArgument("duplicate planet name: " + name);
    }
    result.push_back(std::move(name));
  }
  return result;
}

std::size_t parse_position(const std::string& token) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    if (token.empty() || !std::isdigit(static_cast<unsigned char>(token.front()))) throw 0;
    value = std::stoull(token, &used);
  } catch (...) {
    throw UsageError("--doomed-positions: '" + token + "' is not a position");
  }
  if (used != token.size()) throw UsageError("--doomed-positions: '" + token + "' is not a position");
  return static_cast<std::size_t>(value);
}

// Attaches a rendered trace to a structured document: text traces as a
// string, structured traces as a nested object.
void attach_trace(Json& doc, const std::string& rendered, RenderFormat format) {
  if (format == RenderFormat::kText) doc["trace"] = rendered;
  if (format == RenderFormat::kStructured) doc["trace"] = Json::parse(rendered);
}

void emit(std::ostream& out, bool structured, Json doc, const std::string& text) {
  if (structured) {
    out << doc.dump() << '\n';
  } else {
    out << text;
  }
}

std::string trace_block(const std::string& rendered, RenderFormat format) {
  if (format == RenderFormat::kStructured) return rendered + '\n';
  return rendered;
}

const std::vector<std::string> kFormats{"text", "structured", "none"};

}  // namespace

Limits limits_from_environment() {
  Limits limits;
  if (const char* raw = std::getenv(kNMaxEnv); raw != nullptr) {
    const std::string value(raw);
    std::size_t used = 0;
    unsigned long long parsed = 0;
    try {
      if (value.empty() || !std::isdigit(static_cast<unsigned char>(value.front()))) throw 0;
      parsed = std::stoull(value, &used);
    } catch (...) {
      used = 0;
    }
    if (used != value.size() || used == 0 || parsed == 0) {
      throw std::invalid_argument(std::string(kNMaxEnv) + ": '" + value +
                                  "' is not a positive integer");
    }
    limits.n_max = parsed;
  }
  return limits;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Historical combinatorics: binomial derivations, the conjunction census, "
               "Josephus circles and medieval squaring"};
  app.name("histcomb");
  app.require_subcommand(1);
  app.fallthrough();

  std::string output = "text";
  app.add_option("--output", output, "Result format")
      ->check(CLI::IsMember({"text", "structured"}));

  // binom
  auto* binom = app.add_subcommand("binom", "Derive C(n,k)");
  std::uint64_t binom_n = 0, binom_k = 0;
  std::string strategy = "ibn-ezra";
  std::string binom_trace = "none";
  binom->add_option("n", binom_n, "Number of items")->required();
  binom->add_option("k", binom_k, "Subset size")->required();
  binom->add_option("--strategy", strategy, "Derivation strategy")
      ->check(CLI::IsMember({"ibn-ezra", "eq2-direct", "pascal", "enumerate"}));
  binom->add_option("--trace", binom_trace, "Derivation trace format")->check(CLI::IsMember(kFormats));

  // sum
  auto* sum = app.add_subcommand("sum", "Sum 1 + 2 + ... + m");
  std::uint64_t sum_m = 0;
  std::string sum_trace = "none";
  sum->add_option("m", sum_m, "Upper end of the sum")->required();
  sum->add_option("--trace", sum_trace, "Trace format")->check(CLI::IsMember(kFormats));

  // conjunctions
  auto* conj = app.add_subcommand("conjunctions", "Count possible planetary conjunctions");
  std::string planets_csv;
  std::uint64_t min_size = 2;
  bool list = false;
  conj->add_option("--planets", planets_csv, "Comma-separated planet names");
  conj->add_option("--min-size", min_size, "Smallest conjunction size");
  conj->add_flag("--list", list, "List every conjunction");

  // josephus
  auto* jos = app.add_subcommand("josephus", "Simulate a Josephus elimination circle");
  std::size_t jos_n = 0;
  std::size_t jos_step = 0;
  std::size_t jos_start = 1;
  std::size_t doomed = 0;
  bool find_step = false;
  std::string doomed_positions;
  std::size_t step_limit = 1000;
  jos->add_option("n", jos_n, "Number of people")->required();
  auto* step_opt = jos->add_option("k", jos_step, "Count-off interval");
  jos->add_option("--start", jos_start, "Position where counting begins");
  auto* doomed_opt = jos->add_option("--doomed", doomed, "Number of people to eliminate");
  jos->add_flag("--find-step", find_step, "Search for a step producing --doomed-positions");
  auto* positions_opt =
      jos->add_option("--doomed-positions", doomed_positions, "Comma-separated positions");
  auto* limit_opt = jos->add_option("--step-limit", step_limit, "Largest step to try");

  // square
  auto* sq = app.add_subcommand("square", "Square a number by the medieval recursions");
  std::uint64_t sq_n = 0;
  std::string sq_trace = "text";
  sq->add_option("n", sq_n, "Number to square")->required();
  sq->add_option("--trace", sq_trace, "Plan format")->check(CLI::IsMember(kFormats));

  // multiply
  auto* mul = app.add_subcommand("multiply", "Multiply via a difference of squares");
  std::uint64_t mul_x = 0, mul_y = 0;
  std::string mul_trace = "text";
  mul->add_option("x", mul_x, "First factor")->required();
  mul->add_option("y", mul_y, "Second factor")->required();
  mul->add_option("--trace", mul_trace, "Plan format")->check(CLI::IsMember(kFormats));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const bool structured = output == "structured";
  try {
    const Limits limits = limits_from_environment();
    Json doc;
    doc["schema_version"] = kStructuredSchemaVersion;
    std::ostringstream text;

    if (*binom) {
      const auto format = *parse_render_format(binom_trace);
      const bool oracle = strategy == "pascal";
      if (oracle && format != RenderFormat::kNone) {
        throw UsageError("--trace " + binom_trace + ": strategy 'pascal' produces no derivation");
      }
      const auto query = BinomialQuery::make(binom_n, binom_k, limits);
      doc["command"] = "binom";
      doc["n"] = binom_n;
      doc["k"] = binom_k;
      doc["strategy"] = strategy;
      if (oracle) {
        const auto value = oracles::binomial_pascal(query.n, query.k, limits);
        doc["value"] = value.str();
        text << value << '\n';
      } else {
        const Strategy s = strategy == "ibn-ezra"     ? Strategy::kIbnEzra
                           : strategy == "eq2-direct" ? Strategy::kEq2WithDirectBase
                                                      : Strategy::kDirectOnly;
        const auto node = binomial_derive(query, s, limits);
        if (format != RenderFormat::kNone && expanded_size(*node) > kMaxTraceNodes) {
          throw LimitExceeded("trace size for C(" + std::to_string(query.n) + "," +
                                  std::to_string(query.k) + ") in nodes",
                              static_cast<std::uint64_t>(
                                  std::min<BigInt>(expanded_size(*node), UINT64_MAX)),
                              kMaxTraceNodes);
        }
        const auto rendered = render_derivation(*node, format);
        doc["value"] = node->value.str();
        attach_trace(doc, rendered, format);
        text << node->value << '\n' << trace_block(rendered, format);
      }
    } else if (*sum) {
      const auto format = *parse_render_format(sum_trace);
      const auto value = sum_one_to(sum_m, limits);
      const auto rendered = render_sum(sum_m, value, format);
      doc["command"] = "sum";
      doc["m"] = sum_m;
      doc["value"] = value.str();
      attach_trace(doc, rendered, format);
      text << value << '\n' << trace_block(rendered, format);
    } else if (*conj) {
      const auto planets = planets_csv.empty() && conj->count("--planets") == 0
                               ? classical_planets()
                               : canonical_planets(planets_csv);
      const auto report = conjunction_census(planets, {min_size, list}, limits);
      doc["command"] = "conjunctions";
      doc["planets"] = report.planets;
      Json per_size = Json::object();
      for (const auto& [size, count] : report.per_size) {
        per_size[std::to_string(size)] = count.str();
        text << "size " << size << ": " << count << '\n';
      }
      doc["per_size"] = std::move(per_size);
      doc["total"] = report.total.str();
      text << "total: " << report.total << '\n';
      if (report.subsets) {
        doc["subsets"] = *report.subsets;
        for (const auto& subset : *report.subsets) {
          for (std::size_t i = 0; i < subset.size(); ++i) text << (i ? " " : "") << subset[i];
          text << '\n';
        }
      }
    } else if (*jos) {
      check_limit("circle size", jos_n, limits);
      doc["command"] = "josephus";
      doc["n"] = jos_n;
      doc["start"] = jos_start;
      if (find_step) {
        if (step_opt->count() > 0) throw UsageError("k: the step is searched for with --find-step");
        if (doomed_opt->count() > 0) throw UsageError("--doomed cannot be combined with --find-step");
        if (positions_opt->count() == 0) throw UsageError("--find-step requires --doomed-positions");
        std::set<std::size_t> positions;
        for (const auto& token : split_csv(doomed_positions)) {
          if (!positions.insert(parse_position(token)).second) {
            throw UsageError("--doomed-positions: position " + token + " repeated");
          }
        }
        josephus::CircleConfig{jos_n, 1, jos_start}.validate();
        const auto step = josephus::find_step_for_partition(jos_n, positions, jos_start, step_limit);
        doc["doomed_positions"] = positions;
        doc["step_limit"] = step_limit;
        doc["step"] = step ? Json(*step) : Json(nullptr);
        text << "step: " << (step ? std::to_string(*step) : std::string("none")) << '\n';
      } else {
        if (step_opt->count() == 0) throw UsageError("k: the count-off interval is required");
        if (positions_opt->count() > 0) throw UsageError("--doomed-positions requires --find-step");
        if (limit_opt->count() > 0) throw UsageError("--step-limit requires --find-step");
        const josephus::CircleConfig config{jos_n, jos_step, jos_start};
        const auto trace = josephus::elimination_order(config);
        doc["k"] = jos_step;
        doc["order"] = trace.order;
        text << "order:";
        for (auto p : trace.order) text << ' ' << p;
        text << '\n';
        std::vector<std::size_t> survivors = trace.survivors;
        if (doomed_opt->count() > 0) {
          const auto labels = josephus::arrangement_for_partition(jos_n, doomed, jos_step, jos_start);
          survivors = josephus::elimination_prefix(config, doomed).survivors;
          Json label_names = Json::array();
          text << "arrangement: ";
          for (auto label : labels.labels) {
            label_names.push_back(to_string(label));
            text << (label == josephus::Label::kBad ? 'B' : 'G');
          }
          text << '\n';
          doc["doomed"] = doomed;
          doc["arrangement"] = std::move(label_names);
        }
        doc["survivors"] = survivors;
        text << "survivors:";
        if (survivors.empty()) text << " none";
        for (auto p : survivors) text << ' ' << p;
        text << '\n';
      }
    } else if (*sq) {
      const auto format = *parse_render_format(sq_trace);
      const auto plan = square_plan(sq_n, limits);
      const auto rendered = render_square_plan(plan, format);
      doc["command"] = "square";
      doc["n"] = sq_n;
      doc["value"] = plan.root.value.str();
      doc["depth"] = plan.depth;
      attach_trace(doc, rendered, format);
      text << plan.root.value << '\n' << trace_block(rendered, format);
    } else if (*mul) {
      const auto format = *parse_render_format(mul_trace);
      const auto plan = multiply_plan(mul_x, mul_y, limits);
      const auto rendered = render_multiplication_plan(plan, format);
      doc["command"] = "multiply";
      doc["x"] = mul_x;
      doc["y"] = mul_y;
      doc["value"] = plan.value.str();
      attach_trace(doc, rendered, format);
      text << plan.value << '\n' << trace_block(rendered, format);
    }
    emit(out, structured, std::move(doc), text.str());
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace histcomb::cli
