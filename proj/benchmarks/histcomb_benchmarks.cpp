#include <benchmark/benchmark.h>

#include "histcomb/combinatorics.hpp"
#include "histcomb/josephus.hpp"
#include "histcomb/medieval_arith.hpp"
#include "histcomb/oracles.hpp"
#include "histcomb/trace_render.hpp"

namespace {

using namespace histcomb;

void BM_DeriveIbnEzra(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(binomial_derive({n, n / 2}, Strategy::kIbnEzra));
}
BENCHMARK(BM_DeriveIbnEzra)->RangeMultiplier(2)->Range(8, 256);

void BM_DeriveEq2DirectBase(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(binomial_derive({n, n / 2}, Strategy::kEq2WithDirectBase));
  }
}
BENCHMARK(BM_DeriveEq2DirectBase)->DenseRange(10, 40, 10);

void BM_BinomialPascal(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracles::binomial_pascal(n, n / 2));
}
BENCHMARK(BM_BinomialPascal)->RangeMultiplier(2)->Range(8, 1024)->Arg(2000);

void BM_BinomialEnumerate(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracles::binomial_enumerate(n, n / 2));
}
BENCHMARK(BM_BinomialEnumerate)->DenseRange(10, 22, 4);

void BM_ConjunctionCensus(benchmark::State& state) {
  std::vector<std::string> planets;
  for (int i = 0; i < state.range(0); ++i) planets.push_back("p" + std::to_string(i));
  for (auto _ : state) benchmark::DoNotOptimize(conjunction_census(planets));
}
BENCHMARK(BM_ConjunctionCensus)->RangeMultiplier(2)->Range(7, 112);

void BM_RenderSevenChooseFour(benchmark::State& state) {
  const auto node = binomial_derive({7, 4}, Strategy::kIbnEzra);
  for (auto _ : state) benchmark::DoNotOptimize(render_derivation(*node, RenderFormat::kStructured));
}
BENCHMARK(BM_RenderSevenChooseFour);

void BM_EliminationOrder(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(josephus::elimination_order({size, 9, 1}));
}
BENCHMARK(BM_EliminationOrder)->RangeMultiplier(4)->Range(30, 30720);

void BM_FindStep(benchmark::State& state) {
  const auto order = josephus::elimination_order({30, 9, 1}).order;
  const std::set<std::size_t> doomed(order.begin(), order.begin() + 15);
  for (auto _ : state) benchmark::DoNotOptimize(josephus::find_step_for_partition(30, doomed, 1, 100));
}
BENCHMARK(BM_FindStep);

void BM_SquarePlan(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(square_plan(n));
}
BENCHMARK(BM_SquarePlan)->Arg(7)->Arg(13)->Arg(1999);

void BM_MultiplyPlan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(multiply_plan(1999, 1000));
}
BENCHMARK(BM_MultiplyPlan);

}  // namespace

BENCHMARK_MAIN();
