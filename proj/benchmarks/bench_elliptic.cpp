#include <benchmark/benchmark.h>

#include "elastica/elliptic.hpp"
#include "elastica/moduli.hpp"
#include "elastica/zoo.hpp"

namespace el = elastica::elliptic;

static void BM_CompleteKE(benchmark::State& state) {
  double q = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(el::complete_KE(q));
    q = q > 0.98 ? 0.1 : q + 1e-3;
  }
}
BENCHMARK(BM_CompleteKE);

static void BM_IncompleteF(benchmark::State& state) {
  double x = -6.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(el::incomplete_F(x, 0.9));
    x = x > 6.0 ? -6.0 : x + 1e-3;
  }
}
BENCHMARK(BM_IncompleteF);

static void BM_Jacobi(benchmark::State& state) {
  double u = -10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(el::jacobi(u, 0.85));
    u = u > 10.0 ? -10.0 : u + 1e-3;
  }
}
BENCHMARK(BM_Jacobi);

static void BM_SolveThresholds(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(elastica::moduli::solve_thresholds());
}
BENCHMARK(BM_SolveThresholds)->Unit(benchmark::kMicrosecond);

static void BM_ExportLarc(benchmark::State& state) {
  const auto spec = elastica::zoo::make_pinned_elastica(elastica::zoo::Family::Larc, 0.3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(elastica::zoo::export_curve(spec, state.range(0)));
}
BENCHMARK(BM_ExportLarc)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
