#include <numbers>
#include <random>

#include <benchmark/benchmark.h>

#include "robinc/discrepancy.hpp"
#include "robinc/integer_poly.hpp"
#include "robinc/point_generation.hpp"

using namespace robinc;

namespace {

PointConfiguration random_disk_config(int n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  PointConfiguration pc;
  for (int i = 0; i < n; ++i) pc.points.push_back(std::polar(std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng)));
  return pc;
}

const CompactSet& fig8() {
  static const auto L = CompactSet::lemniscate(Polynomial({-1.0, 0.0, 1.0}), 1.2);
  return L;
}

}  // namespace

static void BM_LogVandermonde(benchmark::State& state) {
  const auto pc = random_disk_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(log_vandermonde(pc));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LogVandermonde)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oNSquared);

static void BM_LejaSegment(benchmark::State& state) {
  const auto seg = CompactSet::segment(-1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(leja_points(seg, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LejaSegment)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMillisecond);

static void BM_FeketeDisk(benchmark::State& state) {
  const auto disk = CompactSet::unit_disk();
  for (auto _ : state) benchmark::DoNotOptimize(fekete_points(disk, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FeketeDisk)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMillisecond);

static void BM_FeketeLemniscate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fekete_points(fig8(), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FeketeLemniscate)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_Certificate(benchmark::State& state) {
  const auto seg = CompactSet::segment(-1, 1);
  const auto pc = leja_points(seg, static_cast<int>(state.range(0))).config();
  const auto phi = TestFunction::parse("abs2", seg.outer_radius());
  for (auto _ : state) benchmark::DoNotOptimize(certificate(phi, pc, seg));
}
BENCHMARK(BM_Certificate)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_Sieve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sieve(state.range(0)).primes.size());
}
BENCHMARK(BM_Sieve)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

static void BM_SharpnessReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sharpness_report(2, 30));
}
BENCHMARK(BM_SharpnessReport)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
