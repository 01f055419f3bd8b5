#ifndef HISTCOMB_JOSEPHUS_HPP
#define HISTCOMB_JOSEPHUS_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

namespace histcomb::josephus {

// People stand at positions 1..size. Counting begins at `start`, which counts
// as 1; every step-th surviving person is removed and counting resumes at the
// next survivor, who again counts as 1.
struct CircleConfig {
  std::size_t size = 1;
  std::size_t step = 1;
  std::size_t start = 1;

  // Throws InvalidArgument unless size >= 1, step >= 1, 1 <= start <= size.
  void validate() const;
};

struct EliminationTrace {
  CircleConfig config;
  std::vector<std::size_t> order;      // 1-based, in elimination sequence
  std::vector<std::size_t> survivors;  // ascending
};

// Runs the circle to completion; survivors is empty.
EliminationTrace elimination_order(const CircleConfig& config);

// Stops after `rounds` eliminations (clamped to size).
EliminationTrace elimination_prefix(const CircleConfig& config, std::size_t rounds);

enum class Label { kGood, kBad };

std::string_view to_string(Label label);

struct ArrangementLabels {
  std::vector<Label> labels;  // labels[p - 1] is the label of position p
};

// Marks the first doomed_count eliminated positions Bad and the rest Good.
ArrangementLabels arrangement_for_partition(std::size_t size, std::size_t doomed_count,
                                            std::size_t step, std::size_t start = 1);

// Smallest step in 1..step_limit whose first |doomed| eliminations are exactly
// `doomed` as a set.
std::optional<std::size_t> find_step_for_partition(std::size_t size,
                                                   const std::set<std::size_t>& doomed,
                                                   std::size_t start, std::size_t step_limit);

}  // namespace histcomb::josephus

#endif  // HISTCOMB_JOSEPHUS_HPP
