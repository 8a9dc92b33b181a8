#include <benchmark/benchmark.h>

#include "avghaz/average_hazard.hpp"
#include "avghaz/piecewise_model.hpp"
#include "avghaz/simulation.hpp"

namespace {

using namespace avghaz;

SurvivalData draw(std::size_t n) {
  RandomStream rng(1);
  return sample_censored(PiecewiseExpModel::constant(0.01), 120.0, n, rng);
}

void BM_KaplanMeierFit(benchmark::State& state) {
  const auto data = draw(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(km_fit(data));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KaplanMeierFit)->RangeMultiplier(10)->Range(10, 100000)->Complexity();

void BM_AhCurve(benchmark::State& state) {
  const auto fit = km_fit(draw(static_cast<std::size_t>(state.range(0))));
  const auto grid = regular_grid(1.0, 120.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(ah_curve(fit, grid));
}
BENCHMARK(BM_AhCurve)->Arg(100)->Arg(10000);

void BM_Replication(benchmark::State& state) {
  const SimulationConfig config{PiecewiseExpModel::constant(0.01), 120.0, {100}, 1,
                                default_tau_grid(), 42, Extrapolation::CarryForward};
  std::size_t rep = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_replication(config, 100, rep++));
}
BENCHMARK(BM_Replication);

void BM_BiasStudy(benchmark::State& state) {
  const SimulationConfig config{PiecewiseExpModel::constant(0.01), 120.0, {10, 30, 50, 100},
                                1000, default_tau_grid(), 42, Extrapolation::CarryForward};
  for (auto _ : state) benchmark::DoNotOptimize(run_bias_study(config, 1));
}
BENCHMARK(BM_BiasStudy)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
