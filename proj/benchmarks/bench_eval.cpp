#include <benchmark/benchmark.h>

#include "besselgauss/closed_form.hpp"
#include "besselgauss/numerics.hpp"
#include "besselgauss/oracle.hpp"

using namespace besselgauss;

// Arguments: m, n.
static void bm_eval_closed(benchmark::State& state) {
  const EvalParams p{static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 0.8, 1.3};
  for (auto _ : state) benchmark::DoNotOptimize(eval_closed(p));
}
BENCHMARK(bm_eval_closed)->Args({0, 0})->Args({8, 0})->Args({4, 4})->Args({0, 8})->Args({10, 20});

static void bm_quadrature_direct(benchmark::State& state) {
  const EvalParams p{static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 0.8, 1.3};
  for (auto _ : state) benchmark::DoNotOptimize(eval_quadrature_direct(p, 1e-12));
}
BENCHMARK(bm_quadrature_direct)->Args({0, 0})->Args({4, 4});

static void bm_quadrature_hermite(benchmark::State& state) {
  const EvalParams p{static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 0.8, 1.3};
  for (auto _ : state) benchmark::DoNotOptimize(eval_quadrature_hermite(p, 1e-12));
}
BENCHMARK(bm_quadrature_hermite)->Args({0, 0})->Args({4, 4});

static void bm_spherical_bessel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double x = 0.25;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spherical_bessel_j(n, x));
    x = x < 40.0 ? x * 1.01 : 0.25;
  }
}
BENCHMARK(bm_spherical_bessel)->Arg(0)->Arg(8)->Arg(30);

static void bm_erf(benchmark::State& state) {
  double x = -5.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(besselgauss::erf(x));
    x = x < 5.0 ? x + 0.013 : -5.0;
  }
}
BENCHMARK(bm_erf);
BENCHMARK_MAIN();
