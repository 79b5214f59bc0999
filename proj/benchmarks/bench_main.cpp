#include <benchmark/benchmark.h>

#include "stationary/stationary.hpp"

using namespace stationary;
using testkit::FixtureKind;

namespace {

StochasticMatrix dense(benchmark::State& state) {
  return testkit::generate({FixtureKind::random_dense, std::size_t(state.range(0)), 1});
}

void BM_DirectSolve(benchmark::State& state) {
  const auto p = dense(state);
  for (auto _ : state) benchmark::DoNotOptimize(solve_stationary_direct(p));
}
BENCHMARK(BM_DirectSolve)->RangeMultiplier(4)->Range(4, 256);

void BM_CesaroSolve(benchmark::State& state) {
  const auto p = testkit::generate({FixtureKind::random_sparse_irreducible,
                                    std::size_t(state.range(0)), 1});
  for (auto _ : state) benchmark::DoNotOptimize(cesaro_solve(p, {1e-10}));
}
BENCHMARK(BM_CesaroSolve)->Arg(4)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_CesaroPlainStep(benchmark::State& state) {
  const auto p = dense(state);
  auto s = cesaro_init(p);
  for (auto _ : state) s = step(s, p);
}
BENCHMARK(BM_CesaroPlainStep)->Arg(4)->Arg(64);

void BM_Irreducibility(benchmark::State& state) {
  const auto p = testkit::generate({FixtureKind::cycle, std::size_t(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(is_irreducible(p));
}
BENCHMARK(BM_Irreducibility)->RangeMultiplier(4)->Range(16, 1024);

void BM_MinPowerTable(benchmark::State& state) {
  const auto g = build_graph(testkit::generate({FixtureKind::random_sparse_irreducible,
                                                std::size_t(state.range(0)), 3}));
  for (auto _ : state) benchmark::DoNotOptimize(min_positive_power_table(g));
}
BENCHMARK(BM_MinPowerTable)->Arg(64)->Arg(512);

void BM_Simulate(benchmark::State& state) {
  const auto p = dense(state);
  for (auto _ : state) benchmark::DoNotOptimize(sample_trajectory(p, 0, 100'000, 7));
  state.SetItemsProcessed(state.iterations() * 100'000);
}
BENCHMARK(BM_Simulate)->Arg(2)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
