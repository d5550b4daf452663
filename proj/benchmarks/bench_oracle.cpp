#include <benchmark/benchmark.h>

#include "gael/rewrite_oracle.hpp"

namespace {

gael::Graph rose(int petals) {
  std::vector<gael::Edge> edges;
  for (int i = 1; i <= petals; ++i) edges.push_back({"e" + std::to_string(i), "v", "v"});
  return gael::Graph({"v"}, std::move(edges), std::nullopt);
}

void BM_BruteForceGradedDim(benchmark::State& state) {
  const gael::Graph g = rose(3);
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    const gael::CohnOracle oracle(g, {0}, 200000);
    benchmark::DoNotOptimize(oracle.graded_dim_bruteforce(k));
  }
}
BENCHMARK(BM_BruteForceGradedDim)->DenseRange(3, 6);

void BM_ReduceSpanningSet(benchmark::State& state) {
  const gael::Graph g = rose(3);
  const gael::CohnOracle oracle(g, {0}, 200000);
  const auto words = oracle.enumerate_spanning(static_cast<unsigned>(state.range(0)));
  gael::AlgebraElement element;
  for (size_t i = 0; i < words.size(); ++i) element.emplace(words[i], mpq_class(1, 1 + i % 5));
  for (auto _ : state) {
    auto reduced = oracle.reduce(element);
    benchmark::DoNotOptimize(reduced);
  }
}
BENCHMARK(BM_ReduceSpanningSet)->DenseRange(2, 5);

void BM_ProductClosure(benchmark::State& state) {
  const gael::Graph g = rose(2);
  const gael::CohnOracle oracle(g, {0});
  for (auto _ : state) {
    auto report = oracle.product_closure_check(2, 2);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_ProductClosure);

}  // namespace

BENCHMARK_MAIN();
