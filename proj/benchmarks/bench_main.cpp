#include <benchmark/benchmark.h>

#include <vector>

#include "hypmetric/balls.hpp"
#include "hypmetric/metrics.hpp"
#include "hypmetric/verify.hpp"

using namespace hypmetric;

namespace {

std::vector<Domain> bench_domains() {
  return {Domain::half_space(2),
          Domain::unit_ball(2),
          Domain::punctured({0, 0}),
          Domain::twice_punctured({-1, 0}, {1, 0}),
          Domain::segment_complement({-1, 0}, {1, 0}),
          Domain::box({0, 0}, {1, 1})};
}

std::vector<std::pair<Point, Point>> pairs_in(const Domain& d, std::size_t n) {
  Rng rng(1);
  std::vector<std::pair<Point, Point>> out;
  for (std::size_t i = 0; i < n; ++i)
    out.emplace_back(sample_interior(d, rng, default_box(d)), sample_interior(d, rng, default_box(d)));
  return out;
}

void BM_HMetric(benchmark::State& state) {
  const Domain d = bench_domains()[state.range(0)];
  const auto pairs = pairs_in(d, 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [x, y] = pairs[i++ & 1023];
    benchmark::DoNotOptimize(h_metric(d, 1.5, x, y));
  }
  state.SetLabel(to_literal(d));
}
BENCHMARK(BM_HMetric)->DenseRange(0, 5);

void BM_TriangularRatio(benchmark::State& state) {
  const Domain d = bench_domains()[state.range(0)];
  const auto pairs = pairs_in(d, 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [x, y] = pairs[i++ & 1023];
    benchmark::DoNotOptimize(s_metric(d, x, y));
  }
  state.SetLabel(to_literal(d));
}
BENCHMARK(BM_TriangularRatio)->DenseRange(0, 5);

void BM_PathInfimumNumeric(benchmark::State& state) {
  const Domain d = bench_domains()[state.range(0)];
  const auto pairs = pairs_in(d, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [x, y] = pairs[i++ & 63];
    benchmark::DoNotOptimize(path_infimum_numeric(d, x, y));
  }
  state.SetLabel(to_literal(d));
}
BENCHMARK(BM_PathInfimumNumeric)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);

void BM_TriangleDefect(benchmark::State& state) {
  const Domain d = Domain::unit_ball(2);
  const Point x{0.1, 0.2}, y{-0.4, 0.3}, z{0.0, -0.5};
  for (auto _ : state) benchmark::DoNotOptimize(triangle_defect(d, 1.5, x, y, z).defect);
}
BENCHMARK(BM_TriangleDefect);

void BM_DefectSearch(benchmark::State& state) {
  const Domain d = bench_domains()[state.range(0)];
  SearchConfig cfg;
  cfg.budget = 20000;
  for (auto _ : state) benchmark::DoNotOptimize(min_defect_search(d, 1.5, cfg).best.defect);
  state.SetLabel(to_literal(d));
}
BENCHMARK(BM_DefectSearch)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_CriticalCHalfSpace(benchmark::State& state) {
  const Domain d = Domain::half_space(2);
  for (auto _ : state) benchmark::DoNotOptimize(critical_c(d, {}).hi);
}
BENCHMARK(BM_CriticalCHalfSpace)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_BoundSweep(benchmark::State& state) {
  const Domain d = Domain::unit_ball(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(quotient_bounds_check(LemmaId::L46, d, {}, state.range(0), 0).empirical_max);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BoundSweep)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_SampleHSphere(benchmark::State& state) {
  const Domain d = Domain::half_space(2);
  for (auto _ : state) benchmark::DoNotOptimize(sample_h_sphere(d, 1.0, {0, 1}, 1.0986122886681098, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleHSphere)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_RhoInclusionBrute(benchmark::State& state) {
  const Point x = state.range(0) == 2 ? Point{0.5, 0} : Point{0.5, 0, 0};
  for (auto _ : state) benchmark::DoNotOptimize(inclusion_radii_rho_unit_ball(x, 1.0986122886681098, 1.0).brute.r1);
}
BENCHMARK(BM_RhoInclusionBrute)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
