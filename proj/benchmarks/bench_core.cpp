#include <benchmark/benchmark.h>

#include "parabolica/asymptotic.hpp"
#include "parabolica/curve_trace.hpp"
#include "parabolica/report.hpp"
#include "parabolica/resultant.hpp"
#include "parabolica/roots.hpp"
#include "parabolica/text.hpp"
#include "parabolica/topology.hpp"

namespace {

using namespace parabolica;

const BivariatePoly& quartic_g() {
  static const BivariatePoly f = parse_polynomial("y*(x+3)*(x-y)*(y+x-3)");
  return f;
}

const BivariatePoly& quintic() {
  static const BivariatePoly f = parse_polynomial("x^5 - 4*x^3*y^2 + 2*x*y^4 + x^2 + y^2");
  return f;
}

void BM_RealRoots(benchmark::State& state) {
  // Wilkinson-style product with a few clustered roots.
  UnivariatePoly p = UnivariatePoly::constant(Rational(1));
  for (int k = 1; k <= state.range(0); ++k) {
    p = p * UnivariatePoly{ratio(-k, 3), Rational(1)};
  }
  for (auto _ : state) benchmark::DoNotOptimize(real_roots(p));
}
BENCHMARK(BM_RealRoots)->Arg(6)->Arg(12)->Arg(20);

void BM_ResultantHessianTangency(benchmark::State& state) {
  const BivariatePoly& f = state.range(0) == 4 ? quartic_g() : quintic();
  const BivariatePoly h = hessian(f);
  const auto [g1, g2] = tangency_polynomial(f);
  (void)g2;
  for (auto _ : state) benchmark::DoNotOptimize(resultant_y(h, g1));
}
BENCHMARK(BM_ResultantHessianTangency)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_TraceHessian(benchmark::State& state) {
  const BivariatePoly h = hessian(quartic_g());
  const double step = 16.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(trace_curve(h, Box::square(8.0), step));
}
BENCHMARK(BM_TraceHessian)->Arg(400)->Arg(1600)->Unit(benchmark::kMillisecond);

void BM_ProjectiveTopology(benchmark::State& state) {
  TopologyOptions o;
  o.grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(projective_topology(quartic_g(), o));
}
BENCHMARK(BM_ProjectiveTopology)->Arg(300)->Arg(600)->Arg(1200)->Unit(benchmark::kMillisecond);

void BM_FindGodrons(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(find_godrons(quintic()));
}
BENCHMARK(BM_FindGodrons)->Unit(benchmark::kMillisecond);

void BM_FullReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(full_report(quartic_g()));
}
BENCHMARK(BM_FullReport)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
