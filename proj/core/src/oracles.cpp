#include "histcomb/oracles.hpp"

#include <numeric>

namespace histcomb::oracles {

PascalTable::PascalTable(std::uint64_t n_max, const Limits& limits) {
  check_limit("n", n_max, limits);
  rows_.reserve(n_max + 1);
  rows_.push_back({BigInt(1)});
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const auto& above = rows_.back();
    std::vector<BigInt> row(n + 1);
    row.front() = 1;
    row.back() = 1;
    for (std::uint64_t k = 1; k < n; ++k) row[k] = above[k - 1] + above[k];
    rows_.push_back(std::move(row));
  }
}

const BigInt& PascalTable::at(std::uint64_t n, std::uint64_t k) const {
  return rows_.at(n).at(k);
}

const std::vector<BigInt>& PascalTable::row(std::uint64_t n) const { return rows_.at(n); }

BigInt binomial_pascal(std::uint64_t n, std::uint64_t k, const Limits& limits) {
  check_limit("n", n, limits);
  if (k > n) return 0;
  // Rolling row of the triangle, truncated at column k.
  std::vector<BigInt> row(k + 1, BigInt(0));
  row[0] = 1;
  for (std::uint64_t r = 1; r <= n; ++r) {
    for (std::uint64_t c = std::min(r, k); c >= 1; --c) row[c] += row[c - 1];
  }
  return row[k];
}

BigInt binomial_enumerate(std::uint64_t n, std::uint64_t k, const Limits& limits) {
  check_enumeration("n", n, limits);
  if (k > n) return 0;
  // Walk the k-subsets of {1..n} in lexicographic order, one at a time.
  std::vector<std::uint64_t> subset(k);
  std::iota(subset.begin(), subset.end(), std::uint64_t{1});
  std::uint64_t count = 0;
  while (true) {
    ++count;
    std::uint64_t i = k;
    while (i > 0 && subset[i - 1] == n - k + i) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::uint64_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return count;
}

BigInt multiply_direct(const BigInt& x, const BigInt& y) { return x * y; }

}  // namespace histcomb::oracles
