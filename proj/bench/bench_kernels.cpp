// Serial vs OpenMP kernels. Run with --benchmark_filter=<name> to pick one.

#include <benchmark/benchmark.h>

#include "koebe/boundary.hpp"
#include "koebe/families.hpp"
#include "koebe/pullback.hpp"
#include "koebe/radius.hpp"

using namespace koebe;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_SampleCurve(benchmark::State& state) {
  const RealPolynomial p = pnew_coeffs(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_curve(p, 4096, std::nullopt, mode(state)));
  }
  label(state);
}
BENCHMARK(BM_SampleCurve)->ArgsProduct({{0, 1}, {10, 51}})->Unit(benchmark::kMillisecond);

void BM_MinDistance(benchmark::State& state) {
  const RealPolynomial p = suffridge_coeffs(static_cast<int>(state.range(1)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_distance(p, 1 << 16, kDefaultRefineTolerance, mode(state)));
  }
  label(state);
}
BENCHMARK(BM_MinDistance)->ArgsProduct({{0, 1}, {10, 51}})->Unit(benchmark::kMillisecond);

void BM_TypicallyReal(benchmark::State& state) {
  const RealPolynomial p = pnew_coeffs(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(typically_real_check(p, 2048, mode(state)));
  label(state);
}
BENCHMARK(BM_TypicallyReal)->ArgsProduct({{0, 1}, {51}})->Unit(benchmark::kMillisecond);

void BM_CertifyRange(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        certify_range(2, static_cast<int>(state.range(1)), kDefaultPrecisionCap, mode(state)));
  }
  label(state);
}
BENCHMARK(BM_CertifyRange)->ArgsProduct({{0, 1}, {51, 80}})->Unit(benchmark::kMillisecond);

void BM_RadiusTable(benchmark::State& state) {
  RadiusTableOptions opts;
  opts.exec = mode(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(radius_table(1, static_cast<int>(state.range(1)), opts));
  }
  label(state);
}
BENCHMARK(BM_RadiusTable)->ArgsProduct({{0, 1}, {51}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
