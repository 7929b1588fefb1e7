#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <vector>

#include "fracgreen/fractional_ops.hpp"
#include "fracgreen/green.hpp"
#include "fracgreen/laplace.hpp"
#include "fracgreen/quadrature.hpp"
#include "fracgreen/wright_quadrature.hpp"
#include "fracgreen/wright_series.hpp"

using namespace fracgreen;

static void BM_WrightSeries(benchmark::State& state) {
  const WrightParams p(-0.25, 0.75);
  const double z = -static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wright(p, z).value);
}
BENCHMARK(BM_WrightSeries)->Arg(1)->Arg(2)->Arg(4);

static void BM_WrightIntegral(benchmark::State& state) {
  const WrightParams p(-0.25, 0.75);
  const double z = -static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wright_integral(p, z).value);
}
BENCHMARK(BM_WrightIntegral)->Arg(1)->Arg(4)->Arg(8);

static void BM_IntegralWright(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(integral_wright(1.0 / 3.0, 2.5).value);
}
BENCHMARK(BM_IntegralWright);

static void BM_Green1d(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(green_1d(0.7, 1.0, 0.6, 1.0).value);
}
BENCHMARK(BM_Green1d);

static void BM_GreenKd(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const GreenSpec spec(0.6, 1.0, UnitVector::normalized(std::vector<double>(k, 1.0)));
  const std::vector<double> r(k, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(green_kd(r, 1.0, spec).value);
}
BENCHMARK(BM_GreenKd)->DenseRange(1, 3);

static void BM_SemiInfiniteQuadrature(benchmark::State& state) {
  auto f = [](double r) { return std::exp(-r) * std::sin(3.0 * std::sqrt(r)) / std::sqrt(r + 1e-300); };
  for (auto _ : state) benchmark::DoNotOptimize(integrate_semi_infinite(f, {}).value);
}
BENCHMARK(BM_SemiInfiniteQuadrature);

static void BM_TalbotGreenHat(benchmark::State& state) {
  const GreenSpec spec(0.5, 1.0, UnitVector({1.0}));
  auto hat = [&](std::complex<double> s) { return green_hat_kd(s, 0.7, spec); };
  for (auto _ : state) benchmark::DoNotOptimize(talbot_inverse(hat, 1.0));
}
BENCHMARK(BM_TalbotGreenHat);

static void BM_CaputoL1(benchmark::State& state) {
  const TimeGrid grid(0.0, 1.0, static_cast<int>(state.range(0)));
  std::vector<double> f(grid.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::pow(grid.node(static_cast<int>(i)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(caputo_derivative(f, 0.5, grid));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CaputoL1)->RangeMultiplier(2)->Range(250, 2000)->Complexity(benchmark::oNSquared);

BENCHMARK_MAIN();
