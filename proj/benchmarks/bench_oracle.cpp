#include <benchmark/benchmark.h>

#include "susy/oracle.hpp"

namespace {

void BM_LowestEigenvalues(benchmark::State& state) {
  const auto params = susy::make_params(7.0, 0.5);
  const auto H = susy::build_hamiltonian(params, susy::RadialGrid(0.01, 24.0, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(susy::lowest_eigenvalues(H, 8));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LowestEigenvalues)->RangeMultiplier(2)->Range(1500, 12000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_Eigenvector(benchmark::State& state) {
  const auto params = susy::make_params(7.0, 0.5);
  const auto H = susy::build_hamiltonian(params, susy::RadialGrid(0.01, 24.0, 12000));
  const auto values = susy::lowest_eigenvalues(H, 4);
  for (auto _ : state) benchmark::DoNotOptimize(susy::eigenvector_for(H, values[3], 3));
}
BENCHMARK(BM_Eigenvector)->Unit(benchmark::kMillisecond);

}  // namespace
