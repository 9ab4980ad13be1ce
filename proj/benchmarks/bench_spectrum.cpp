#include <benchmark/benchmark.h>

#include "seaweed/families.hpp"
#include "seaweed/meander.hpp"
#include "seaweed/spectrum.hpp"
#include "seaweed/sweep.hpp"

using namespace seaweed;

static void BM_IndexMaximalParabolic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SeaweedSpec spec(Composition({n / 2 + 1, n - n / 2 - 1}), Composition({n}));
  for (auto _ : state) benchmark::DoNotOptimize(index_sl(spec));
}
BENCHMARK(BM_IndexMaximalParabolic)->RangeMultiplier(4)->Range(16, 4096);

static void BM_SpectrumK1(benchmark::State& state) {
  const auto spec = family_spec(FamilyId::K1, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(spec));
}
BENCHMARK(BM_SpectrumK1)->RangeMultiplier(2)->Range(8, 256);

static void BM_ExtendedSpectrumK1(benchmark::State& state) {
  const auto spec = family_spec(FamilyId::K1, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(extended_spectrum(spec));
}
BENCHMARK(BM_ExtendedSpectrumK1)->RangeMultiplier(2)->Range(8, 256);

static void BM_FamilyFormulaK1(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(family_spectrum(FamilyId::K1, k, 1));
}
BENCHMARK(BM_FamilyFormulaK1)->RangeMultiplier(2)->Range(8, 256);

static void BM_EnumerateFrobenius(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_frobenius(n));
}
BENCHMARK(BM_EnumerateFrobenius)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
