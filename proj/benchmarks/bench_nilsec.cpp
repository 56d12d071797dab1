#include <benchmark/benchmark.h>

#include "nilsec/secant.hpp"
#include "nilsec/verify.hpp"

using namespace nilsec;

namespace {

void BM_EnumerateSo(benchmark::State& state) {
  const LieType t = LieType::so(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_orbits(t));
}
BENCHMARK(BM_EnumerateSo)->DenseRange(9, 17, 4);

void BM_HasseSl(benchmark::State& state) {
  const LieType t = LieType::sl(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hasse(t));
}
BENCHMARK(BM_HasseSl)->DenseRange(6, 12, 3);

void BM_WeightedDynkinE8(benchmark::State& state) {
  const auto orbits = enumerate_orbits(LieType(Series::E8, 8));
  for (auto _ : state)
    for (const auto& o : orbits) benchmark::DoNotOptimize(orbit_dim_from_marks(o.type(), weighted_dynkin(o)));
}
BENCHMARK(BM_WeightedDynkinE8);

void BM_ReportsSp(benchmark::State& state) {
  const auto orbits = enumerate_orbits(LieType::sp(static_cast<int>(state.range(0))));
  for (auto _ : state)
    for (const auto& o : orbits)
      if (!o.is_zero()) benchmark::DoNotOptimize(build_secant_report(o));
}
BENCHMARK(BM_ReportsSp)->Arg(8)->Arg(16);

void BM_VerifyAll(benchmark::State& state) {
  const auto types = default_verify_types();
  for (auto _ : state)
    for (const auto& t : types)
      for (const auto& s : suite_names()) benchmark::DoNotOptimize(run_suite(s, t));
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
