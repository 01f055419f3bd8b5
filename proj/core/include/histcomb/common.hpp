#ifndef HISTCOMB_COMMON_HPP
#define HISTCOMB_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace histcomb {

// Every count and value in the library is exact; nothing wraps.
using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultNMax = 2000;
inline constexpr std::uint64_t kDefaultEnumerationMax = 25;

// Size limits applied to every public operation. n_max bounds the problem
// size (n of a binomial query, m of a sum, operands of the arithmetic plans);
// enumeration_max bounds anything that generates subsets explicitly.
struct Limits {
  std::uint64_t n_max = kDefaultNMax;
  std::uint64_t enumeration_max = kDefaultEnumerationMax;
};

// Base of all domain errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies above the configured n_max.
class LimitExceeded : public Error {
 public:
  LimitExceeded(const std::string& what_arg, std::uint64_t value, std::uint64_t limit)
      : Error(what_arg + " = " + std::to_string(value) + " exceeds limit " + std::to_string(limit)),
        value_(value),
        limit_(limit) {}

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t value_;
  std::uint64_t limit_;
};

// Explicit enumeration was asked for a set larger than enumeration_max.
class GuardRefused : public Error {
 public:
  GuardRefused(const std::string& what_arg, std::uint64_t value, std::uint64_t limit)
      : Error("enumeration guard: " + what_arg + " = " + std::to_string(value) +
              " exceeds enumeration limit " + std::to_string(limit)),
        value_(value),
        limit_(limit) {}

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t value_;
  std::uint64_t limit_;
};

// Arguments violate a precondition other than a size limit (k > n,
// duplicate names, start outside the circle, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

inline void check_limit(const char* name, std::uint64_t value, const Limits& limits) {
  if (value > limits.n_max) throw LimitExceeded(name, value, limits.n_max);
}

inline void check_enumeration(const char* name, std::uint64_t value, const Limits& limits) {
  if (value > limits.enumeration_max) throw GuardRefused(name, value, limits.enumeration_max);
}

}  // namespace histcomb

#endif  // HISTCOMB_COMMON_HPP
