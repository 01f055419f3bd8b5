#ifndef HISTCOMB_COMBINATORICS_HPP
#define HISTCOMB_COMBINATORICS_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "histcomb/common.hpp"

namespace histcomb {

// Identifies one coefficient C(n, k).
struct BinomialQuery {
  std::uint64_t n = 0;
  std::uint64_t k = 0;

  // Validating constructor: requires k <= n (InvalidArgument) and
  // n <= limits.n_max (LimitExceeded).
  static BinomialQuery make(std::uint64_t n, std::uint64_t k, const Limits& limits = {});

  friend auto operator<=>(const BinomialQuery&, const BinomialQuery&) = default;
};

enum class DerivationRule {
  kTriangularFormula,  // C(n,2) = (n-1)((n-1)/2 + 1/2)
  kHockeyStick,        // C(n,k) = C(n-1,k-1) + C(n-2,k-1) + ... + C(k-1,k-1)
  kDirectEnumeration,  // counted by listing the subsets
  kTrivial,            // k = 0, k = 1 or k = n
};

std::string_view to_string(DerivationRule rule);
std::optional<DerivationRule> parse_derivation_rule(std::string_view name);

struct DerivationNode;

// Derivation trees are immutable once built. Identical sub-derivations are
// shared between parents, so a tree whose expansion has millions of nodes
// occupies only one node per distinct query.
using DerivationPtr = std::shared_ptr<const DerivationNode>;

struct DerivationNode {
  DerivationRule rule = DerivationRule::kTrivial;
  BinomialQuery query;
  BigInt value;
  // HockeyStick: queries (n-1,k-1), (n-2,k-1), ..., (k-1,k-1) in that order.
  std::vector<DerivationPtr> children;
  // HockeyStick: the child values. TriangularFormula: 1, 2, ..., n-1.
  std::vector<BigInt> summands;
};

enum class Strategy {
  // Hockey-stick expansion down to pairs, pairs by the triangular formula.
  kIbnEzra,
  // Same expansion, but pairs are counted by enumeration.
  kEq2WithDirectBase,
  // One enumeration of the whole query.
  kDirectOnly,
};

std::string_view to_string(Strategy strategy);

// 1 + 2 + ... + m, evaluated as m(m+1)/2.
BigInt sum_one_to(std::uint64_t m, const Limits& limits = {});

// C(n, 2) as a TriangularFormula node. n = 0 and n = 1 yield a Trivial node
// with value 0 and query (n, 2).
DerivationPtr triangular_count(std::uint64_t n, const Limits& limits = {});

DerivationPtr binomial_derive(BinomialQuery query, Strategy strategy, const Limits& limits = {});

// Number of lines the fully expanded tree would print (shared subtrees
// counted once per occurrence).
BigInt expanded_size(const DerivationNode& node);

// Sun, Moon, Mercury, Venus, Mars, Jupiter, Saturn.
const std::vector<std::string>& classical_planets();

struct CensusOptions {
  std::uint64_t min_size = 2;
  bool list_subsets = false;
};

struct ConjunctionReport {
  std::vector<std::string> planets;
  std::map<std::uint64_t, BigInt> per_size;
  BigInt total;
  // Grouped by ascending size, lexicographic by planet order within a size.
  std::optional<std::vector<std::vector<std::string>>> subsets;
};

// Counts the subsets of at least options.min_size planets. Throws
// InvalidArgument for an empty list, an empty or duplicate name, or
// min_size == 0; GuardRefused when listing more than enumeration_max planets.
ConjunctionReport conjunction_census(const std::vector<std::string>& planets,
                                     const CensusOptions& options = {},
                                     const Limits& limits = {});

}  // namespace histcomb

#endif  // HISTCOMB_COMBINATORICS_HPP
