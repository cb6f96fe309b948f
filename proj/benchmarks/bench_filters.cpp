#include <benchmark/benchmark.h>

#include <numbers>

#include "gibbs/filters.hpp"
#include "gibbs/fourier_series.hpp"
#include "gibbs/test_functions.hpp"

namespace {

void BM_EulerWeightTable(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gibbs::EulerWeightTable(M));
}
BENCHMARK(BM_EulerWeightTable)->Arg(64)->Arg(512)->Arg(1000);

// Weight rows at a fixed distance from the jump; HDAF cost grows with N d.
void BM_FilterWeights(benchmark::State& state) {
  const auto filter = gibbs::FilterSpec::parse(state.range(1) == 0 ? "erfclog" : "hdaf");
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(filter.weights(N, 1.0));
  state.SetLabel(filter.name());
}
BENCHMARK(BM_FilterWeights)->ArgsProduct({{64, 512}, {0, 1}});

void BM_FilteredPartialSum(benchmark::State& state) {
  const auto f = gibbs::make_sws();
  const int N = static_cast<int>(state.range(0));
  const auto filter = gibbs::FilterSpec::euler();
  for (auto _ : state) {
    benchmark::DoNotOptimize(gibbs::filtered_partial_sum(f, 5 * std::numbers::pi / 8, N, filter));
  }
}
BENCHMARK(BM_FilteredPartialSum)->Arg(60)->Arg(600);

}  // namespace
