#include <benchmark/benchmark.h>

#include "susy/potential.hpp"

namespace {

void BM_PotentialClosedForm(benchmark::State& state) {
  const auto params = susy::make_params(7.0, 0.5);
  double x = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(susy::potential_closed_form(x, params));
    x = x < 24.0 ? x + 1e-3 : 0.01;
  }
}
BENCHMARK(BM_PotentialClosedForm);

void BM_ShapeResidual(benchmark::State& state) {
  const auto params = susy::make_params(7.0, 0.5);
  double x = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(susy::shape_invariance_residual(x, params, 3));
    x = x < 24.0 ? x + 1e-3 : 0.01;
  }
}
BENCHMARK(BM_ShapeResidual);

}  // namespace
