#include "histcomb/combinatorics.hpp"

#include <array>
#include <set>
#include <unordered_map>
#include <utility>

#include "histcomb/oracles.hpp"

namespace histcomb {

namespace {

constexpr std::array<std::pair<DerivationRule, std::string_view>, 4> kRuleNames{{
    {DerivationRule::kTriangularFormula, "TriangularFormula"},
    {DerivationRule::kHockeyStick, "HockeyStick"},
    {DerivationRule::kDirectEnumeration, "DirectEnumeration"},
    {DerivationRule::kTrivial, "Trivial"},
}};

DerivationPtr make_trivial(BinomialQuery query) {
  auto node = std::make_shared<DerivationNode>();
  node->rule = DerivationRule::kTrivial;
  node->query = query;
  node->value = query.k == 1 ? BigInt(query.n) : BigInt(1);
  return node;
}

DerivationPtr make_triangular(std::uint64_t n) {
  auto node = std::make_shared<DerivationNode>();
  node->rule = DerivationRule::kTriangularFormula;
  node->query = {n, 2};
  node->summands.reserve(n - 1);
  for (std::uint64_t i = 1; i < n; ++i) node->summands.emplace_back(i);
  // (n-1)((n-1)/2 + 1/2) without fractions.
  node->value = BigInt(n - 1) * n / 2;
  return node;
}

DerivationPtr make_enumerated(BinomialQuery query, const Limits& limits) {
  auto node = std::make_shared<DerivationNode>();
  node->rule = DerivationRule::kDirectEnumeration;
  node->query = query;
  node->value = oracles::binomial_enumerate(query.n, query.k, limits);
  return node;
}

bool is_trivial(BinomialQuery q) { return q.k <= 1 || q.k == q.n; }

struct QueryHash {
  std::size_t operator()(BinomialQuery q) const noexcept {
    return std::hash<std::uint64_t>{}(q.n * 0x9E3779B97F4A7C15ULL ^ q.k);
  }
};

// Builds derivations for one strategy, sharing every sub-derivation it has
// already produced.
class Deriver {
 public:
  Deriver(Strategy strategy, const Limits& limits) : strategy_(strategy), limits_(limits) {}

  DerivationPtr derive(BinomialQuery q) {
    if (is_trivial(q)) return make_trivial(q);
    if (strategy_ == Strategy::kDirectOnly) return make_enumerated(q, limits_);

    if (auto it = memo_.find(q); it != memo_.end()) return it->second;

    DerivationPtr result;
    if (q.k == 2) {
      result = strategy_ == Strategy::kIbnEzra ? make_triangular(q.n) : make_enumerated(q, limits_);
    } else {
      auto node = std::make_shared<DerivationNode>();
      node->rule = DerivationRule::kHockeyStick;
      node->query = q;
      node->children.reserve(q.n - q.k + 1);
      node->summands.reserve(q.n - q.k + 1);
      // C(n,k) = C(n-1,k-1) + C(n-2,k-1) + ... + C(k-1,k-1)
      for (std::uint64_t m = q.n; m-- > q.k - 1;) {
        auto child = derive({m, q.k - 1});
        node->summands.push_back(child->value);
        node->value += child->value;
        node->children.push_back(std::move(child));
      }
      result = std::move(node);
    }
    memo_.emplace(q, result);
    return result;
  }

 private:
  Strategy strategy_;
  Limits limits_;
  std::unordered_map<BinomialQuery, DerivationPtr, QueryHash> memo_;
};

}  // namespace

BinomialQuery BinomialQuery::make(std::uint64_t n, std::uint64_t k, const Limits& limits) {
  if (k > n) {
    throw InvalidArgument("invalid binomial query: k = " + std::to_string(k) +
                          " exceeds n = " + std::to_string(n));
  }
  check_limit("n", n, limits);
  return {n, k};
}

std::string_view to_string(DerivationRule rule) {
  for (const auto& [r, name] : kRuleNames) {
    if (r == rule) return name;
  }
  return "Unknown";
}

std::optional<DerivationRule> parse_derivation_rule(std::string_view name) {
  for (const auto& [r, n] : kRuleNames) {
    if (n == name) return r;
  }
  return std::nullopt;
}

std::string_view to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::kIbnEzra: return "IbnEzra";
    case Strategy::kEq2WithDirectBase: return "Eq2WithDirectBase";
    case Strategy::kDirectOnly: return "DirectOnly";
  }
  return "Unknown";
}

BigInt sum_one_to(std::uint64_t m, const Limits& limits) {
  check_limit("m", m, limits);
  return BigInt(m) * (m + 1) / 2;
}

DerivationPtr triangular_count(std::uint64_t n, const Limits& limits) {
  check_limit("n", n, limits);
  if (n < 2) {
    auto node = std::make_shared<DerivationNode>();
    node->rule = DerivationRule::kTrivial;
    node->query = {n, 2};
    node->value = 0;
    return node;
  }
  return make_triangular(n);
}

DerivationPtr binomial_derive(BinomialQuery query, Strategy strategy, const Limits& limits) {
  // Re-validate: the struct is an aggregate and may not have come from make().
  query = BinomialQuery::make(query.n, query.k, limits);
  return Deriver(strategy, limits).derive(query);
}

BigInt expanded_size(const DerivationNode& node) {
  std::unordered_map<const DerivationNode*, BigInt> sizes;
  auto walk = [&sizes](auto&& self, const DerivationNode& n) -> BigInt {
    if (auto it = sizes.find(&n); it != sizes.end()) return it->second;
    BigInt total = 1;
    for (const auto& child : n.children) total += self(self, *child);
    sizes.emplace(&n, total);
    return total;
  };
  return walk(walk, node);
}

const std::vector<std::string>& classical_planets() {
  static const std::vector<std::string> planets{"Sun",  "Moon",    "Mercury", "Venus",
                                                "Mars", "Jupiter", "Saturn"};
  return planets;
}

ConjunctionReport conjunction_census(const std::vector<std::string>& planets,
                                     const CensusOptions& options, const Limits& limits) {
  if (planets.empty()) throw InvalidArgument("planet list is empty");
  if (options.min_size == 0) throw InvalidArgument("min_size must be at least 1");
  std::set<std::string_view> seen;
  for (const auto& name : planets) {
    if (name.empty()) throw InvalidArgument("planet names must be non-empty");
    if (!seen.insert(name).second) throw InvalidArgument("duplicate planet name: " + name);
  }
  const std::uint64_t n = planets.size();
  check_limit("number of planets", n, limits);
  if (options.list_subsets) check_enumeration("number of planets", n, limits);

  ConjunctionReport report;
  report.planets = planets;
  Deriver deriver(Strategy::kIbnEzra, limits);
  for (std::uint64_t s = options.min_size; s <= n; ++s) {
    auto node = deriver.derive({n, s});
    report.total += node->value;
    report.per_size.emplace(s, node->value);
  }

  if (options.list_subsets) {
    std::vector<std::vector<std::string>> subsets;
    for (std::uint64_t s = options.min_size; s <= n; ++s) {
      std::vector<std::uint64_t> idx(s);
      for (std::uint64_t j = 0; j < s; ++j) idx[j] = j;
      while (true) {
        auto& subset = subsets.emplace_back();
        subset.reserve(s);
        for (auto j : idx) subset.push_back(planets[j]);
        std::uint64_t i = s;
        while (i > 0 && idx[i - 1] == n - s + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::uint64_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    report.subsets = std::move(subsets);
  }
  return report;
}

}  // namespace histcomb
