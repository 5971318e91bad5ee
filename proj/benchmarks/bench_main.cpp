#include <benchmark/benchmark.h>

#include "hypint/criterion.hpp"
#include "hypint/dwork.hpp"
#include "hypint/series.hpp"
#include "hypint/valuation.hpp"

using namespace hypint;

namespace {

LatticeConfig cubic() {
  return LatticeConfig({{1, 1, 1, 0, 1}, {0, 1, 1, 1, 1}, {3, 0, 0, 0, 1}, {0, 3, 0, 0, 1}, {0, 0, 3, 0, 1}, {0, 0, 0, 3, 1}},
                       {0, 1});
}

void BM_ExpandCubic(benchmark::State& state) {
  LatticeConfig cfg = cubic();
  for (auto _ : state) benchmark::DoNotOptimize(expand_Fu(cfg, {-1, -2, -2, -1, -2}, state.range(0)));
}
BENCHMARK(BM_ExpandCubic)->Arg(30)->Arg(90)->Arg(180)->Unit(benchmark::kMillisecond);

void BM_ExpandRatioFamily(benchmark::State& state) {
  LatticeConfig cfg = build_config(RatioFamily({{30}, {1}}, {{15}, {10}, {6}}));
  for (auto _ : state) benchmark::DoNotOptimize(expand_Fu(cfg, {-1, -1, -1, 0, 0, 0}, state.range(0)));
}
BENCHMARK(BM_ExpandRatioFamily)->Arg(320)->Arg(1600)->Unit(benchmark::kMillisecond);

void BM_MinHeight(benchmark::State& state) {
  LatticeConfig cfg = build_config(RatioFamily({{30}, {1}}, {{15}, {10}, {6}}));
  for (auto _ : state) benchmark::DoNotOptimize(min_height(cfg, 8));
}
BENCHMARK(BM_MinHeight)->Unit(benchmark::kMillisecond);

void BM_LandauMin(benchmark::State& state) {
  RatioFamily fam({{3, 1}, {1, 3}}, {{2, 1}, {1, 2}, {1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(landau_min(fam));
}
BENCHMARK(BM_LandauMin)->Unit(benchmark::kMicrosecond);

void BM_PIntegrality(benchmark::State& state) {
  LatticeConfig cfg = cubic();
  for (auto _ : state) benchmark::DoNotOptimize(verify_p_integrality(cfg, {-1, -2, -2, -1, -2}, state.range(0)));
}
BENCHMARK(BM_PIntegrality)->Arg(30)->Arg(90)->Unit(benchmark::kMillisecond);

void BM_DworkTables(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(DworkTables(state.range(0), 12, -1, 30));
}
BENCHMARK(BM_DworkTables)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_PiAdicMultiply(benchmark::State& state) {
  auto ring = PiRing::make(state.range(0), 40);
  PiAdic a = PiAdic::from_rat(ring, Rat(7, 11)), b = PiAdic::from_rat(ring, Rat(-13, 17));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PiAdicMultiply)->Arg(2)->Arg(5)->Arg(7);

void BM_EigenvectorCubic(benchmark::State& state) {
  LatticeConfig cfg = cubic();
  for (auto _ : state) benchmark::DoNotOptimize(verify_eigenvector(cfg, state.range(0), 12, 3, 3));
}
BENCHMARK(BM_EigenvectorCubic)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
