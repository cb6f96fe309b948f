#include <benchmark/benchmark.h>

#include <numbers>

#include "gibbs/experiment.hpp"

namespace {

void BM_SweepSawtooth(benchmark::State& state) {
  gibbs::ExperimentConfig c;
  c.function_key = "sws";
  c.filters = {gibbs::FilterSpec::euler()};
  c.xs = {std::numbers::pi / 8};
  c.n_min = 50;
  c.n_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gibbs::sweep_errors(c));
}
BENCHMARK(BM_SweepSawtooth)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);

void BM_RhoCurve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gibbs::rho_curve("sws+lorentzian", 3601, {}));
}
BENCHMARK(BM_RhoCurve);

}  // namespace
