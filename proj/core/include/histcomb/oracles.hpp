#ifndef HISTCOMB_ORACLES_HPP
#define HISTCOMB_ORACLES_HPP

// Brute-force reference computations. Nothing in here shares code with the
// historical procedures in combinatorics.hpp or medieval_arith.hpp.

#include <cstdint>
#include <vector>

#include "histcomb/common.hpp"

namespace histcomb::oracles {

// Pascal's triangle built additively up to row n_max.
class PascalTable {
 public:
  explicit PascalTable(std::uint64_t n_max, const Limits& limits = {});

  std::uint64_t n_max() const noexcept { return rows_.size() - 1; }

  // Precondition: k <= n <= n_max().
  const BigInt& at(std::uint64_t n, std::uint64_t k) const;

  const std::vector<BigInt>& row(std::uint64_t n) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

// C(n, k) from the additive recurrence. Returns 0 for k > n.
BigInt binomial_pascal(std::uint64_t n, std::uint64_t k, const Limits& limits = {});

// Counts the k-subsets of {1..n} by generating each one.
// Throws GuardRefused when n > limits.enumeration_max.
BigInt binomial_enumerate(std::uint64_t n, std::uint64_t k, const Limits& limits = {});

BigInt multiply_direct(const BigInt& x, const BigInt& y);

}  // namespace histcomb::oracles

#endif  // HISTCOMB_ORACLES_HPP
