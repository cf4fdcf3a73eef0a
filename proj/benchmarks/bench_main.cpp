#include <benchmark/benchmark.h>

#include "egg/area.hpp"
#include "egg/elliptic.hpp"
#include "egg/oracle.hpp"
#include "egg/taylor.hpp"

namespace {

void BM_CompleteK(benchmark::State& state) {
  const egg::Modulus m{0.7};
  for (auto _ : state) benchmark::DoNotOptimize(egg::complete_K(m));
}
BENCHMARK(BM_CompleteK);

void BM_CompleteE(benchmark::State& state) {
  const egg::Modulus m{0.7};
  for (auto _ : state) benchmark::DoNotOptimize(egg::complete_E(m));
}
BENCHMARK(BM_CompleteE);

void BM_AreaExact(benchmark::State& state) {
  const egg::CurveParams p(4, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(egg::area_exact(p));
}
BENCHMARK(BM_AreaExact);

void BM_QuadArea(benchmark::State& state) {
  const egg::CurveParams p(4, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(egg::oracle::quad_area(p));
}
BENCHMARK(BM_QuadArea)->Unit(benchmark::kMillisecond);

void BM_AreaSeriesAtOne(benchmark::State& state) {
  const auto terms = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(egg::area_series_of_modulus(1.0, 1e-300, terms));
}
BENCHMARK(BM_AreaSeriesAtOne)->Arg(1000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_SecondTaylorArea(benchmark::State& state) {
  const egg::SeriesTarget target{egg::SeriesKind::Area};
  for (auto _ : state) benchmark::DoNotOptimize(egg::second_taylor(target, 10, 1.0));
}
BENCHMARK(BM_SecondTaylorArea);

}  // namespace

BENCHMARK_MAIN();
