#include <benchmark/benchmark.h>

#include "grtor/cancel.hpp"
#include "grtor/local_filtered.hpp"
#include "grtor/resolution.hpp"
#include "grtor/spectral.hpp"
#include "grtor/standard_basis.hpp"

using namespace grtor;

namespace {

RingPtr xy() { return PolyRing::make(FieldSpec::rationals(), {"X", "Y"}); }

void BM_TorSeriesExample1(benchmark::State& state) {
  RingPtr r = xy();
  RingSpec g{r, Setting::Graded, {}};
  IdealPresentation i{g, parse_polynomial_list(r, "X^2")};
  auto m = ModulePresentation::cyclic(i);
  const int j_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tor_series(m, m, 2, j_max));
}
BENCHMARK(BM_TorSeriesExample1)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Example2Resolution(benchmark::State& state) {
  auto r = PolyRing::make(FieldSpec::rationals(), {"x1", "x2", "x3"});
  RingSpec g{r, Setting::Graded, parse_polynomial_list(r, "x1^4")};
  IdealPresentation i{g, parse_polynomial_list(r, "x1^2, x1*x2, x1*x3")};
  IdealPresentation k{g, parse_polynomial_list(r, "x1, x2, x3")};
  auto m = ModulePresentation::cyclic(i);
  auto n = ModulePresentation::cyclic(k);
  for (auto _ : state) benchmark::DoNotOptimize(tor_series(m, n, static_cast<int>(state.range(0)), 12));
}
BENCHMARK(BM_Example2Resolution)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_MoraStandardBasis(benchmark::State& state) {
  RingPtr r = xy();
  RingSpec loc{r, Setting::Local, {}};
  IdealPresentation i{loc, parse_polynomial_list(r, "X^2 - Y^3, X^2 - Y^5, X*Y^4 + Y^7")};
  for (auto _ : state) benchmark::DoNotOptimize(StandardBasis(i, 30).colength());
}
BENCHMARK(BM_MoraStandardBasis)->Unit(benchmark::kMicrosecond);

void BM_Example1Pipeline(benchmark::State& state) {
  RingPtr r = xy();
  RingSpec loc{r, Setting::Local, {}};
  IdealPresentation i{loc, parse_polynomial_list(r, "X^2 - Y^3")};
  IdealPresentation j{loc, parse_polynomial_list(r, "X^2 - Y^5")};
  const int j_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto lift = lift_cyclic(i, 3, j_max + 4);
    benchmark::DoNotOptimize(run_to_stability(filtered_tensor(lift.resolution, j, 2, j_max)));
  }
}
BENCHMARK(BM_Example1Pipeline)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_SpectralRandom(benchmark::State& state) {
  RandomComplexParams p;
  p.i_max = 4;
  p.max_dim = static_cast<int>(state.range(0));
  auto rc = random_filtered_complex(7, p);
  for (auto _ : state) benchmark::DoNotOptimize(run_to_stability(rc.complex));
}
BENCHMARK(BM_SpectralRandom)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_DecideCancellation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  BigradedSeries source(3, 2 * n + 2);
  BigradedSeries target(3, 2 * n + 2);
  for (int j = 0; j < n; ++j) {
    source.add(1, j, 2);
    source.add(0, j + 1, 2);
    target.add(1, j, 1);
    target.add(0, j + 1, 1);
  }
  for (auto _ : state) benchmark::DoNotOptimize(decide_cancellation(source, target));
}
BENCHMARK(BM_DecideCancellation)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
