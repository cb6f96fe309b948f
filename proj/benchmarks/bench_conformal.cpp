#include <benchmark/benchmark.h>

#include <numbers>

#include "gibbs/conformal.hpp"
#include "gibbs/test_functions.hpp"

namespace {

void BM_RecoefficientLog2(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto a = gibbs::log2_series(N);
  const auto map = gibbs::ConformalMap::mobius2();
  for (auto _ : state) benchmark::DoNotOptimize(gibbs::recoefficient(a, map, N));
  state.SetComplexityN(N);
}
BENCHMARK(BM_RecoefficientLog2)->RangeMultiplier(2)->Range(32, 1024)->Complexity(benchmark::oNSquared);

void BM_ConformalFourierSum(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto f = gibbs::make_test_function("sws+lorentzian");
  const auto map = gibbs::ConformalMap::mobius2();
  for (auto _ : state) benchmark::DoNotOptimize(gibbs::conformal_fourier_sum(f, std::numbers::pi / 12, N, map));
}
BENCHMARK(BM_ConformalFourierSum)->Arg(64)->Arg(200);

}  // namespace
