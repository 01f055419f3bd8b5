#include "histcomb/josephus.hpp"

#include <algorithm>
#include <string>

#include "histcomb/common.hpp"

namespace histcomb::josephus {

void CircleConfig::validate() const {
  if (size < 1) throw InvalidArgument("circle size must be at least 1");
  if (step < 1) throw InvalidArgument("step must be at least 1");
  if (start < 1 || start > size) {
    throw InvalidArgument("start = " + std::to_string(start) + " is outside 1.." +
                          std::to_string(size));
  }
}

EliminationTrace elimination_prefix(const CircleConfig& config, std::size_t rounds) {
  config.validate();
  const std::size_t n = config.size;
  rounds = std::min(rounds, n);

  // Circular singly linked list over 0-based slots.
  std::vector<std::size_t> next(n);
  for (std::size_t i = 0; i < n; ++i) next[i] = (i + 1) % n;
  std::vector<bool> alive(n, true);

  std::size_t current = config.start - 1;
  std::size_t previous = (current + n - 1) % n;
  std::size_t remaining = n;

  EliminationTrace trace{config, {}, {}};
  trace.order.reserve(rounds);
  while (trace.order.size() < rounds) {
    // `current` counts as 1; walk to the step-th survivor.
    for (std::size_t advance = (config.step - 1) % remaining; advance > 0; --advance) {
      previous = current;
      current = next[current];
    }
    trace.order.push_back(current + 1);
    alive[current] = false;
    next[previous] = next[current];
    current = next[current];
    --remaining;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (alive[i]) trace.survivors.push_back(i + 1);
  }
  return trace;
}

EliminationTrace elimination_order(const CircleConfig& config) {
  return elimination_prefix(config, config.size);
}

std::string_view to_string(Label label) { return label == Label::kBad ? "Bad" : "Good"; }

ArrangementLabels arrangement_for_partition(std::size_t size, std::size_t doomed_count,
                                            std::size_t step, std::size_t start) {
  if (doomed_count > size) {
    throw InvalidArgument("doomed count " + std::to_string(doomed_count) +
                          " exceeds circle size " + std::to_string(size));
  }
  const auto trace = elimination_prefix({size, step, start}, doomed_count);
  ArrangementLabels result{std::vector<Label>(size, Label::kGood)};
  for (auto position : trace.order) result.labels[position - 1] = Label::kBad;
  return result;
}

std::optional<std::size_t> find_step_for_partition(std::size_t size,
                                                   const std::set<std::size_t>& doomed,
                                                   std::size_t start, std::size_t step_limit) {
  if (step_limit < 1) throw InvalidArgument("step limit must be at least 1");
  for (auto p : doomed) {
    if (p < 1 || p > size) {
      throw InvalidArgument("doomed position " + std::to_string(p) + " is outside 1.." +
                            std::to_string(size));
    }
  }
  for (std::size_t step = 1; step <= step_limit; ++step) {
    const auto trace = elimination_prefix({size, step, start}, doomed.size());
    if (std::set<std::size_t>(trace.order.begin(), trace.order.end()) == doomed) return step;
  }
  return std::nullopt;
}

}  // namespace histcomb::josephus
