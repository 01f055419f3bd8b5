#include "histcomb/combinatorics.hpp"

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "histcomb/oracles.hpp"
#include "tree_check.hpp"

namespace histcomb {
namespace {

std::vector<BinomialQuery> child_queries(const DerivationNode& node) {
  std::vector<BinomialQuery> out;
  for (const auto& c : node.children) out.push_back(c->query);
  return out;
}

TEST(BinomialQuery, Validation) {
  EXPECT_NO_THROW(BinomialQuery::make(7, 4));
  EXPECT_NO_THROW(BinomialQuery::make(0, 0));
  EXPECT_THROW(BinomialQuery::make(4, 7), InvalidArgument);
  EXPECT_THROW(BinomialQuery::make(2001, 1), LimitExceeded);
  EXPECT_NO_THROW(BinomialQuery::make(2001, 1, Limits{3000, 25}));
}

TEST(DerivationRule, NamesRoundTrip) {
  for (auto rule : {DerivationRule::kTriangularFormula, DerivationRule::kHockeyStick,
                    DerivationRule::kDirectEnumeration, DerivationRule::kTrivial}) {
    EXPECT_EQ(parse_derivation_rule(to_string(rule)), rule);
  }
  EXPECT_FALSE(parse_derivation_rule("Factorial"));
}

TEST(SumOneTo, Examples) {
  EXPECT_EQ(sum_one_to(20), 210);
  EXPECT_EQ(sum_one_to(0), 0);
  EXPECT_EQ(sum_one_to(100), 5050);
}

TEST(SumOneTo, MatchesLoopUpTo1000) {
  BigInt running = 0;
  for (std::uint64_t m = 0; m <= 1000; ++m) {
    running += m;
    EXPECT_EQ(sum_one_to(m), running) << m;
  }
}

TEST(SumOneTo, Limit) {
  EXPECT_THROW(sum_one_to(2001), LimitExceeded);
  EXPECT_EQ(sum_one_to(2000), 2001000);
}

TEST(TriangularCount, Examples) {
  const auto seven = triangular_count(7);
  EXPECT_EQ(seven->rule, DerivationRule::kTriangularFormula);
  EXPECT_EQ(seven->value, 21);
  EXPECT_EQ(seven->summands, (std::vector<BigInt>{1, 2, 3, 4, 5, 6}));
  EXPECT_TRUE(seven->children.empty());

  EXPECT_EQ(triangular_count(6)->value, 15);
  EXPECT_EQ(triangular_count(2)->value, 1);
  EXPECT_EQ(triangular_count(2)->rule, DerivationRule::kTriangularFormula);
}

TEST(TriangularCount, DegenerateSizes) {
  for (std::uint64_t n : {0, 1}) {
    const auto node = triangular_count(n);
    EXPECT_EQ(node->rule, DerivationRule::kTrivial);
    EXPECT_EQ(node->value, 0);
    EXPECT_EQ(node->query, (BinomialQuery{n, 2}));
  }
}

TEST(TriangularCount, LimitExceeded) { EXPECT_THROW(triangular_count(2001), LimitExceeded); }

TEST(BinomialDerive, SevenChooseFourExpansion) {
  const auto root = binomial_derive(BinomialQuery::make(7, 4), Strategy::kIbnEzra);
  EXPECT_EQ(root->value, 35);
  EXPECT_EQ(root->rule, DerivationRule::kHockeyStick);
  EXPECT_EQ(child_queries(*root),
            (std::vector<BinomialQuery>{{6, 3}, {5, 3}, {4, 3}, {3, 3}}));
  // [C(5,2)+C(4,2)+C(3,2)+C(2,2)] + [C(4,2)+C(3,2)+C(2,2)] + [C(3,2)+C(2,2)] + C(2,2)
  EXPECT_EQ(child_queries(*root->children[0]),
            (std::vector<BinomialQuery>{{5, 2}, {4, 2}, {3, 2}, {2, 2}}));
  EXPECT_EQ(root->summands, (std::vector<BigInt>{20, 10, 4, 1}));
  EXPECT_EQ(root->children[3]->rule, DerivationRule::kTrivial);
  EXPECT_EQ(expanded_size(*root), 14);
}

TEST(BinomialDerive, SeventhRowValues) {
  EXPECT_EQ(binomial_derive({7, 3}, Strategy::kIbnEzra)->value, 35);
  EXPECT_EQ(binomial_derive({7, 2}, Strategy::kIbnEzra)->value, 21);
  EXPECT_EQ(binomial_derive({7, 2}, Strategy::kIbnEzra)->rule, DerivationRule::kTriangularFormula);
  EXPECT_EQ(binomial_derive({12, 5}, Strategy::kIbnEzra)->value, 792);
}

TEST(BinomialDerive, TrivialQueries) {
  for (auto strategy : {Strategy::kIbnEzra, Strategy::kEq2WithDirectBase, Strategy::kDirectOnly}) {
    const auto five = binomial_derive({5, 5}, strategy);
    EXPECT_EQ(five->rule, DerivationRule::kTrivial);
    EXPECT_EQ(five->value, 1);
    EXPECT_EQ(binomial_derive({9, 1}, strategy)->value, 9);
    EXPECT_EQ(binomial_derive({9, 0}, strategy)->value, 1);
    EXPECT_EQ(binomial_derive({0, 0}, strategy)->rule, DerivationRule::kTrivial);
  }
}

TEST(BinomialDerive, DirectBaseReplacesTriangularLeaves) {
  const auto root = binomial_derive({7, 4}, Strategy::kEq2WithDirectBase);
  EXPECT_EQ(root->value, 35);
  EXPECT_EQ(root->children[0]->children[0]->rule, DerivationRule::kDirectEnumeration);
  EXPECT_EQ(check_tree(*root, Strategy::kEq2WithDirectBase), "");

  const auto direct = binomial_derive({7, 4}, Strategy::kDirectOnly);
  EXPECT_EQ(direct->rule, DerivationRule::kDirectEnumeration);
  EXPECT_TRUE(direct->children.empty());
}

TEST(BinomialDerive, EnumerationGuard) {
  EXPECT_THROW(binomial_derive({26, 13}, Strategy::kDirectOnly), GuardRefused);
  EXPECT_THROW(binomial_derive({26, 2}, Strategy::kEq2WithDirectBase), GuardRefused);
  // The largest pair leaf of (n,k) is (n-k+2, 2).
  EXPECT_NO_THROW(binomial_derive({30, 15}, Strategy::kEq2WithDirectBase));
  EXPECT_THROW(binomial_derive({30, 5}, Strategy::kEq2WithDirectBase), GuardRefused);
  // Trivial queries never enumerate.
  EXPECT_NO_THROW(binomial_derive({100, 1}, Strategy::kDirectOnly));
}

TEST(BinomialDerive, LimitAndInvalidQuery) {
  EXPECT_THROW(binomial_derive({2001, 3}, Strategy::kIbnEzra), LimitExceeded);
  EXPECT_THROW(binomial_derive({3, 4}, Strategy::kIbnEzra), InvalidArgument);
}

TEST(BinomialDerive, OracleEquivalenceUpTo20) {
  const oracles::PascalTable table(20);
  for (std::uint64_t n = 0; n <= 20; ++n) {
    for (std::uint64_t k = 0; k <= n; ++k) {
      for (auto s : {Strategy::kIbnEzra, Strategy::kEq2WithDirectBase, Strategy::kDirectOnly}) {
        EXPECT_EQ(binomial_derive({n, k}, s)->value, table.at(n, k))
            << n << ' ' << k << ' ' << to_string(s);
      }
    }
  }
}

TEST(BinomialDerive, RandomTreesSatisfyShapeInvariants) {
  std::mt19937_64 rng(1164);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(0, 30)(rng);
    const std::uint64_t k = std::uniform_int_distribution<std::uint64_t>(0, n)(rng);
    EXPECT_EQ(check_tree(*binomial_derive({n, k}, Strategy::kIbnEzra), Strategy::kIbnEzra), "");
    if (n - k + 2 <= kDefaultEnumerationMax || k <= 1 || k == n) {
      EXPECT_EQ(check_tree(*binomial_derive({n, k}, Strategy::kEq2WithDirectBase),
                           Strategy::kEq2WithDirectBase),
                "");
    }
  }
}

TEST(BinomialDerive, LargeValuesStayExact) {
  const auto node = binomial_derive({100, 50}, Strategy::kIbnEzra);
  EXPECT_EQ(node->value, BigInt("100891344545564193334812497256"));
}

TEST(BinomialDerive, SubtreesAreShared) {
  const auto root = binomial_derive({7, 4}, Strategy::kIbnEzra);
  // C(4,2) appears under both C(6,3) and C(5,3).
  EXPECT_EQ(root->children[0]->children[1].get(), root->children[1]->children[0].get());
}

TEST(ConjunctionCensus, SevenPlanets) {
  const auto report = conjunction_census(classical_planets());
  EXPECT_EQ(report.total, 120);
  const std::map<std::uint64_t, BigInt> expected{{2, 21}, {3, 35}, {4, 35}, {5, 21}, {6, 7}, {7, 1}};
  EXPECT_EQ(report.per_size, expected);
  EXPECT_FALSE(report.subsets.has_value());
  EXPECT_EQ(report.planets.back(), "Saturn");
}

TEST(ConjunctionCensus, SmallLists) {
  EXPECT_EQ(conjunction_census({"Sun", "Moon"}).total, 1);
  EXPECT_EQ(conjunction_census({"A", "B", "C", "D"}).total, 11);
  EXPECT_EQ(conjunction_census({"A"}).total, 0);
  EXPECT_TRUE(conjunction_census({"A"}).per_size.empty());
  EXPECT_EQ(conjunction_census({"A", "B", "C"}, {1, false}).total, 7);
}

TEST(ConjunctionCensus, Errors) {
  EXPECT_THROW(conjunction_census({}), InvalidArgument);
  EXPECT_THROW(conjunction_census({"Sun", "Sun"}), InvalidArgument);
  EXPECT_THROW(conjunction_census({"Sun", ""}), InvalidArgument);
  EXPECT_THROW(conjunction_census({"Sun"}, {0, false}), InvalidArgument);
  std::vector<std::string> many;
  for (int i = 0; i < 26; ++i) many.push_back("p" + std::to_string(i));
  EXPECT_NO_THROW(conjunction_census(many));
  EXPECT_THROW(conjunction_census(many, {2, true}), GuardRefused);
}

TEST(ConjunctionCensus, TotalIsTwoToTheNMinusOneMinusN) {
  std::vector<std::string> planets;
  for (std::uint64_t n = 1; n <= 40; ++n) {
    planets.push_back("p" + std::to_string(n));
    const auto report = conjunction_census(planets);
    EXPECT_EQ(report.total, (BigInt(1) << n) - 1 - n) << n;
    BigInt sum = 0;
    for (const auto& [s, count] : report.per_size) {
      EXPECT_EQ(count, oracles::binomial_pascal(n, s));
      sum += count;
    }
    EXPECT_EQ(sum, report.total);
  }
}

TEST(ConjunctionCensus, ListingMatchesCounts) {
  const auto& planets = classical_planets();
  const auto report = conjunction_census(planets, {2, true});
  ASSERT_TRUE(report.subsets.has_value());
  std::map<std::uint64_t, BigInt> by_size;
  std::set<std::vector<std::string>> unique;
  for (const auto& subset : *report.subsets) {
    by_size[subset.size()] += 1;
    EXPECT_TRUE(unique.insert(subset).second);
    // Sorted by planet order.
    for (std::size_t i = 1; i < subset.size(); ++i) {
      auto pos = [&](const std::string& name) {
        return std::find(planets.begin(), planets.end(), name) - planets.begin();
      };
      EXPECT_LT(pos(subset[i - 1]), pos(subset[i]));
    }
  }
  EXPECT_EQ(by_size, report.per_size);
  EXPECT_EQ(report.subsets->front(), (std::vector<std::string>{"Sun", "Moon"}));
  EXPECT_EQ(report.subsets->back(), planets);
}

}  // namespace
}  // namespace histcomb
