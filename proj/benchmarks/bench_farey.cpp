#include <benchmark/benchmark.h>

#include "farey/farey.hpp"

using namespace farey;

static void BM_TotientSieve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(TotientTable::build(state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TotientSieve)->RangeMultiplier(10)->Range(10'000, 10'000'000)->Unit(benchmark::kMillisecond);

static void BM_RankFast(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const auto table = TotientTable::build(n);
  const Fraction x(n / 3 + 1, n);
  for (auto _ : state) benchmark::DoNotOptimize(rank_fast(n, x, table));
}
BENCHMARK(BM_RankFast)->RangeMultiplier(10)->Range(1'000, 10'000'000);

static void BM_RankOracle(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const Fraction x(n / 3 + 1, n);
  for (auto _ : state) benchmark::DoNotOptimize(rank_oracle(n, x));
}
BENCHMARK(BM_RankOracle)->RangeMultiplier(4)->Range(64, 4096);

static void BM_StreamWindow(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  std::int64_t count = 0;
  for (auto _ : state) {
    std::int64_t den_sum = 0;
    count = for_each_in_window(n, Fraction::zero(), Fraction::one(), [&](const Fraction& f) { den_sum += f.den(); });
    benchmark::DoNotOptimize(den_sum);
  }
  state.SetItemsProcessed(state.iterations() * count);
}
BENCHMARK(BM_StreamWindow)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);

static void BM_DressScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dress_scan(state.range(0)));
}
BENCHMARK(BM_DressScan)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);

static void BM_MapWindow(benchmark::State& state) {
  const auto pair = VertexPair::make(Fraction(1, 3), Fraction(1, 2));
  const std::int64_t i = state.range(0);
  const std::int64_t n = 3 * i * (i + 1) * 10;
  const auto params = MapParams::make(pair, n / (3 * i), i, n);
  for (auto _ : state) benchmark::DoNotOptimize(map_window(params));
}
BENCHMARK(BM_MapWindow)->DenseRange(10, 50, 20);
BENCHMARK_MAIN();
