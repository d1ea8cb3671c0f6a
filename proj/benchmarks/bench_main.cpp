#include <benchmark/benchmark.h>

#include "sfk/asymptotics.hpp"
#include "sfk/curvature.hpp"
#include "sfk/cylinder.hpp"
#include "sfk/lambert.hpp"
#include "sfk/momentum.hpp"

namespace {

void BM_LambertW0(benchmark::State& state) {
  double x = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sfk::lambert_w0(x).w);
    x = x * 1.0000001 + 1e-9;
  }
}
BENCHMARK(BM_LambertW0);

void BM_LambertW0Jet(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(sfk::lambert_w0_derivative(1234.5, 4));
}
BENCHMARK(BM_LambertW0Jet);

void BM_MomentumScalarCurvature(benchmark::State& state) {
  auto p = sfk::profile_cp1(2, sfk::Rational(1, 2));
  double tau = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sfk::scalar_curvature_momentum(p, tau));
    tau = tau < 100.0 ? tau * 1.01 : 0.01;
  }
}
BENCHMARK(BM_MomentumScalarCurvature);

void BM_RadialOracle(benchmark::State& state) {
  auto prof = sfk::profile_cp1(1, sfk::Rational(0));
  auto pot = sfk::potential_from_profile(prof);
  for (auto _ : state)
    benchmark::DoNotOptimize(sfk::scalar_curvature_radial(pot, 25.0).scalar);
}
BENCHMARK(BM_RadialOracle);

void BM_InvertRadius(benchmark::State& state) {
  auto prof = sfk::profile_cpn(3, -1);
  for (auto _ : state) benchmark::DoNotOptimize(sfk::invert_radius(prof, -40.0));
}
BENCHMARK(BM_InvertRadius);

void BM_IndicialRoots(benchmark::State& state) {
  for (auto _ : state) {
    auto spec = sfk::indicial_roots(sfk::IndicialProblem::from_base_eigenvalue(6.0));
    benchmark::DoNotOptimize(spec.kappa);
  }
}
BENCHMARK(BM_IndicialRoots);

}  // namespace

BENCHMARK_MAIN();
