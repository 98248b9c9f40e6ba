#include <benchmark/benchmark.h>

#include "susy/hyperpoly.hpp"

namespace {

void BM_CreationChain(benchmark::State& state) {
  const auto params = susy::make_params(susy::Rational(200), susy::Rational(1, 2));
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(susy::creation_chain(n, params));
}
BENCHMARK(BM_CreationChain)->DenseRange(2, 32, 6);

void BM_FormDerivatives(benchmark::State& state) {
  const auto params = susy::make_params(7.0, 0.5);
  const susy::FormEvaluator eval(susy::eigenfunction(7, params));
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval.derivatives(x));
    x = x < 20.0 ? x + 0.01 : 0.5;
  }
}
BENCHMARK(BM_FormDerivatives);

}  // namespace
