#include <benchmark/benchmark.h>

#include "gael/resolvent.hpp"

namespace {

gael::ExactMatrix fib() {
  return gael::ExactMatrix::from_rows({{1, 1}, {1, 0}});
}

void BM_Resolvent(benchmark::State& state) {
  const gael::ExactMatrix a = fib();
  for (auto _ : state) {
    auto r = gael::resolvent(a, {4.0, 1.0});
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Resolvent);

void BM_PowerViaCauchy(benchmark::State& state) {
  const gael::ExactMatrix a = fib();
  const auto nodes = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto p = gael::power_via_cauchy(a, {4.0, 5, nodes});
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_PowerViaCauchy)->RangeMultiplier(4)->Range(64, 1024);

void BM_NormBoundSweep(benchmark::State& state) {
  const gael::ExactMatrix a = fib();
  for (auto _ : state) {
    auto report = gael::resolvent_norm_bound_check(a, 4.0, 360);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_NormBoundSweep);

}  // namespace

BENCHMARK_MAIN();
