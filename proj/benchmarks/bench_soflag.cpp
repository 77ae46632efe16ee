#include <benchmark/benchmark.h>

#include "soflag/characters.hpp"
#include "soflag/flagmatrix.hpp"
#include "soflag/laplacian.hpp"
#include "soflag/numeric.hpp"

using namespace soflag;

static void BM_LapPartition(benchmark::State& state) {
  auto parts = enumerate_exact(static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    for (auto& p : parts) benchmark::DoNotOptimize(lap_partition(p));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(parts.size()));
}
BENCHMARK(BM_LapPartition)->DenseRange(2, 8, 2);

static void BM_BuildMatrixSO4(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_matrix(GroupMode::so4(), BasisId::So4, k));
}
BENCHMARK(BM_BuildMatrixSO4)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_BuildMatrixSO4Closed(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_matrix_closed(GroupMode::so4(), BasisId::So4, k));
}
BENCHMARK(BM_BuildMatrixSO4Closed)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_EigenvaluesSO4(benchmark::State& state) {
  FlagMatrix m = build_matrix(GroupMode::so4(), BasisId::So4, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_exact(m));
}
BENCHMARK(BM_EigenvaluesSO4)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_CharacterSO3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(character_so3(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_CharacterSO3)->Arg(5)->Arg(15);

static void BM_LapNumeric(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto u = numeric::random_son(n, 1).u;
  const Partition lambda{3, 2};
  for (auto _ : state) benchmark::DoNotOptimize(numeric::lap_numeric(lambda, u));
}
BENCHMARK(BM_LapNumeric)->DenseRange(3, 8, 1);

static void BM_VerifyPartition(benchmark::State& state) {
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(numeric::verify_partition(6, Partition{3, 2}, 64, 7, 1e-8, threads));
}
BENCHMARK(BM_VerifyPartition)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_MAIN();
