#include <benchmark/benchmark.h>

#include "gaussquad/baseline.hpp"
#include "gaussquad/graded.hpp"
#include "gaussquad/integrand.hpp"
#include "gaussquad/moments.hpp"
#include "gaussquad/specfun.hpp"

namespace {

using namespace gaussquad;

void BM_Erf(benchmark::State& state) {
  double x = -6.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::erf(x));
    x = x > 6.0 ? -6.0 : x + 0.01;
  }
}
BENCHMARK(BM_Erf);

void BM_WeightMoments(benchmark::State& state) {
  const int k_max = static_cast<int>(state.range(0));
  const GaussianWeight weight(25.0, -1.2);
  for (auto _ : state) benchmark::DoNotOptimize(weight_moments(weight, k_max));
}
BENCHMARK(BM_WeightMoments)->Arg(4)->Arg(12)->Arg(30);

void BM_QuadP(benchmark::State& state) {
  const auto f = expx2_integrand();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quadp(f, 500.0, n, 4).value);
}
BENCHMARK(BM_QuadP)->Arg(5)->Arg(10)->Arg(20);

void BM_QuadE(benchmark::State& state) {
  const auto f = expx2_integrand();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quade(f, 500.0, n).value);
}
BENCHMARK(BM_QuadE)->Arg(3)->Arg(4)->Arg(6);

void BM_Simpson(benchmark::State& state) {
  const auto g = weighted_integrand(expx2_integrand(), GaussianWeight(500.0, 0.0));
  for (auto _ : state) benchmark::DoNotOptimize(composite_simpson(g, 64));
}
BENCHMARK(BM_Simpson);

}  // namespace
BENCHMARK_MAIN();
