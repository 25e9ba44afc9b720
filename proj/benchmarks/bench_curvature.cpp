#include "shrinker/shrinker.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace shrinker;

const ChartAtlas& fs_atlas() {
  static const ChartAtlas atlas = zoo_build("fubini_study_cp2").atlas;
  return atlas;
}

void BM_CurvatureBundle(benchmark::State& state) {
  const MetricChart& chart = fs_atlas().charts[0];
  const Vec4 p(0.61, 1.07, 2.3, 5.1);
  for (auto _ : state) {
    CurvatureBundle b = curvature_bundle(chart, p);
    benchmark::DoNotOptimize(b.scalar);
  }
}
BENCHMARK(BM_CurvatureBundle);

void BM_CurvatureOperator(benchmark::State& state) {
  const MetricChart& chart = fs_atlas().charts[0];
  const Vec4 p(0.61, 1.07, 2.3, 5.1);
  const CurvatureBundle b = curvature_bundle(chart, p);
  for (auto _ : state) {
    CurvatureOperator op = curvature_operator(b, chart.orientation);
    benchmark::DoNotOptimize(op.matrix);
  }
}
BENCHMARK(BM_CurvatureOperator);

void BM_InvariantIntegrand(benchmark::State& state) {
  // Full per-node cost of the invariant quadrature path.
  const MetricChart& chart = fs_atlas().charts[0];
  const Vec4 p(0.61, 1.07, 2.3, 5.1);
  for (auto _ : state) {
    const CurvatureBundle b = curvature_bundle(chart, p);
    const CurvatureOperator op = curvature_operator(b, chart.orientation);
    const WeylNorms w = weyl_sd_norms(op);
    benchmark::DoNotOptimize(w.plus2 + w.minus2);
  }
}
BENCHMARK(BM_InvariantIntegrand);

void BM_HodgeStar(benchmark::State& state) {
  const MetricChart& chart = fs_atlas().charts[0];
  const Mat4 g = chart.g(Vec4(0.61, 1.07, 2.3, 5.1));
  for (auto _ : state) {
    HodgeStar star = hodge_star(g, -1);
    benchmark::DoNotOptimize(star.matrix);
  }
}
BENCHMARK(BM_HodgeStar);

void BM_InvariantReportCoarse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  QuadratureSpec spec;
  spec.nodes = n;
  spec.refinement = 1.0;
  for (auto _ : state) {
    InvariantReport rep = invariant_report(fs_atlas(), spec);
    benchmark::DoNotOptimize(rep.chi.value);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n) * n * n * n);
}
BENCHMARK(BM_InvariantReportCoarse)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
