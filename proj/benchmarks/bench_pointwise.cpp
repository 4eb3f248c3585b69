#include <benchmark/benchmark.h>

#include "rext/hypersurface.hpp"

namespace {

using namespace rext;

CotangentPoint point(int n) {
  Vec x(n), w(n);
  for (int i = 0; i < n; ++i) {
    x(i) = 0.3 * (i + 1) - 0.4;
    w(i) = 0.2 * i + 0.5;
  }
  return {x, w};
}

void BM_ExpressionJet(benchmark::State& st) {
  const auto e = expr::Expression::parse("sin(x1*x2) + exp(0.3*x3)/(2 + x1^2) - sqrt(1 + x2^2)", 3);
  const Vec x = point(3).x;
  for (auto _ : st) benchmark::DoNotOptimize(e.eval_jet2(x));
}
BENCHMARK(BM_ExpressionJet);

void BM_Metric(benchmark::State& st) {
  const CatalogEntry e = prod3();
  const CotangentPoint p = point(3);
  for (auto _ : st) benchmark::DoNotOptimize(metric_at(e.connection, {1, 2}, p));
}
BENCHMARK(BM_Metric);

void BM_LeviCivitaCoords(benchmark::State& st) {
  const CatalogEntry e = prod3();
  const AmbientPoint q = AmbientPoint::at(e.connection, {1, 2}, point(3));
  for (auto _ : st) benchmark::DoNotOptimize(lc_coords(q));
}
BENCHMARK(BM_LeviCivitaCoords);

void BM_FbarCoords(benchmark::State& st) {
  const CatalogEntry e = prod3();
  const AmbientPoint q = AmbientPoint::at(e.connection, {1, 2}, point(3));
  for (auto _ : st) benchmark::DoNotOptimize(fbar_coords(q));
}
BENCHMARK(BM_FbarCoords);

void BM_SurfacePointAndSample(benchmark::State& st) {
  const CatalogEntry e = prod3();
  const HypersurfaceSpec h{e.connection, {1, 4}, e.xi, ScalarFieldSpec::parse("0.3*x2*x3", 3), 1.0};
  const CotangentPoint p0 = point(3);
  const CotangentPoint p = project_omega(h, p0.x, p0.omega);
  for (auto _ : st) benchmark::DoNotOptimize(to_acm_sample(SurfacePoint::at(h, p)));
}
BENCHMARK(BM_SurfacePointAndSample);

void BM_ClassReport(benchmark::State& st) {
  const CatalogEntry e = prod3();
  const HypersurfaceSpec h{e.connection, {1, 4}, e.xi, ScalarFieldSpec::parse("0", 3), 1.0};
  const CotangentPoint p0 = point(3);
  const ACMSample s = to_acm_sample(SurfacePoint::at(h, project_omega(h, p0.x, p0.omega)));
  for (auto _ : st) benchmark::DoNotOptimize(class_report(s));
}
BENCHMARK(BM_ClassReport);

}  // namespace

BENCHMARK_MAIN();
