#include <benchmark/benchmark.h>

#include <random>

#include "elastica/energy.hpp"
#include "elastica/solver.hpp"

using namespace elastica;

static void BM_EnergyGradient(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g(0.0, 0.1);
  std::vector<double> a(n);
  for (auto& v : a) v = g(rng);
  const DiscreteCurve c(1.5, a);
  const auto cone = Obstacle::cone(0.3);
  const Penalties pen{&cone, 1e3, 1e2, {1.0, 0.0}};
  for (auto _ : state) benchmark::DoNotOptimize(energy_gradient(c, 0.5, pen));
}
BENCHMARK(BM_EnergyGradient)->Arg(128)->Arg(1024)->Unit(benchmark::kMicrosecond);

static void BM_Minimize(benchmark::State& state) {
  SolverConfig cfg;
  cfg.segments = static_cast<std::size_t>(state.range(0));
  cfg.multistarts = 2;
  cfg.parallel = false;
  const auto cone = Obstacle::cone(0.3);
  for (auto _ : state) benchmark::DoNotOptimize(minimize(cone, 1.2, cfg));
}
BENCHMARK(BM_Minimize)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
