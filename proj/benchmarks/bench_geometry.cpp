#include <benchmark/benchmark.h>

#include "nilgeo/catalog.hpp"
#include "nilgeo/connection.hpp"
#include "nilgeo/curvature.hpp"
#include "nilgeo/finsler.hpp"
#include "nilgeo/geodesic.hpp"
#include "nilgeo/poly_text.hpp"

using namespace nilgeo;

namespace {

void BM_KoszulConnection(benchmark::State& state) {
  const CatalogEntry entry = build(static_cast<PresetId>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(koszul_connection(entry.algebra));
  }
}

void BM_CurvatureTensor(benchmark::State& state) {
  const CatalogEntry entry = build(static_cast<PresetId>(state.range(0)));
  const ConnectionTable conn = koszul_connection(entry.algebra);
  for (auto _ : state) {
    benchmark::DoNotOptimize(curvature_tensor(entry.algebra, conn));
  }
}

void BM_CurvatureSummary(benchmark::State& state) {
  const CatalogEntry entry = build(static_cast<PresetId>(state.range(0)));
  const CurvatureTensor R =
      curvature_tensor(entry.algebra, koszul_connection(entry.algebra));
  for (auto _ : state) {
    benchmark::DoNotOptimize(curvature_summary(entry.algebra, R));
  }
}

void BM_Classify(benchmark::State& state) {
  const CatalogEntry entry = build(static_cast<PresetId>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(entry.algebra));
  }
}

void BM_GeodesicSystem(benchmark::State& state) {
  const CatalogEntry entry = build(static_cast<PresetId>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(geodesic_system(entry.algebra));
  }
}

void BM_PolynomialMultiply(benchmark::State& state) {
  auto ctx = ParamContext::make({"a", "b", "c", "d"});
  const Polynomial p =
      poly_from_text(ctx, "(a + 2*b - c)^3 + a*b*c*d - 5/7*d^2");
  const Polynomial q = poly_from_text(ctx, "(a - b + 3*d)^3 + c^2 - 1/3");
  for (auto _ : state) {
    benchmark::DoNotOptimize(p * q);
  }
}

void BM_RegressionBundle(benchmark::State& state) {
  const CatalogEntry entry = build(static_cast<PresetId>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(regression_bundle(entry));
  }
}

}  // namespace

BENCHMARK(BM_KoszulConnection)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CurvatureTensor)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CurvatureSummary)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Classify)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_GeodesicSystem)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PolynomialMultiply)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RegressionBundle)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
