#include <benchmark/benchmark.h>

#include "gael/entropy.hpp"
#include "gael/filtration.hpp"
#include "gael/graph.hpp"

namespace {

gael::Graph fibonacci() {
  return gael::Graph({"v", "w"},
                     {{"loop", "v", "v"}, {"vw", "v", "w"}, {"wv", "w", "v"}},
                     std::nullopt);
}

void BM_DimSequencePath(benchmark::State& state) {
  const gael::Graph g = fibonacci();
  const auto kmax = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto seq = gael::dim_sequence(g, gael::AlgebraKind::Path, kmax);
    benchmark::DoNotOptimize(seq);
  }
}
BENCHMARK(BM_DimSequencePath)->Arg(50)->Arg(100)->Arg(200);

void BM_DimSequenceCohn(benchmark::State& state) {
  const gael::Graph g = fibonacci();
  const auto kmax = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto seq = gael::dim_sequence(g, gael::AlgebraKind::Cohn, kmax);
    benchmark::DoNotOptimize(seq);
  }
}
BENCHMARK(BM_DimSequenceCohn)->Arg(50)->Arg(100)->Arg(200);

void BM_DimSequenceLeavitt(benchmark::State& state) {
  const gael::Graph g = fibonacci();
  const auto kmax = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto seq = gael::dim_sequence(g, gael::AlgebraKind::Leavitt, kmax);
    benchmark::DoNotOptimize(seq);
  }
}
BENCHMARK(BM_DimSequenceLeavitt)->Arg(50)->Arg(100)->Arg(200);

void BM_VerifyChain(benchmark::State& state) {
  const gael::Graph g = fibonacci();
  for (auto _ : state) {
    auto report = gael::verify_chain(g, static_cast<unsigned>(state.range(0)), 0.05);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_VerifyChain)->Arg(100)->Arg(200);

void BM_SpectralRadius(benchmark::State& state) {
  const gael::ExactMatrix a = gael::Graph::random(4, 6, 12).adjacency();
  for (auto _ : state) {
    auto est = gael::spectral_radius(a);
    benchmark::DoNotOptimize(est);
  }
}
BENCHMARK(BM_SpectralRadius);

}  // namespace

BENCHMARK_MAIN();
