// Microbenchmarks for the hot paths: exact commutators, the radial solver and
// the adaptive integrator.

#include "darboux/classical.hpp"
#include "darboux/operator_expr.hpp"
#include "darboux/quantization.hpp"
#include "darboux/radial.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace darboux;
using algebra::OperatorExpr;
using algebra::Rational;

static void BM_HamiltonianFradkinCommutator(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto h = algebra::build_hamiltonian(algebra::Flavor::tlb, dim);
  const auto fradkin = algebra::build_fradkin(algebra::Flavor::tlb, dim);
  for (auto _ : state) {
    const OperatorExpr c = algebra::commutator(h, fradkin[0][1]);
    benchmark::DoNotOptimize(c.is_zero());
  }
}
BENCHMARK(BM_HamiltonianFradkinCommutator)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_RadialSolve(benchmark::State& state) {
  spectra::RadialProblem p;
  p.params = ModelParams{3, 0.02, 1.0, 1.0};
  p.grid.points = static_cast<int>(state.range(0));
  spectra::SolveOptions options;
  options.refinements = 0;
  options.extrapolate = false;
  for (auto _ : state) benchmark::DoNotOptimize(spectra::solve_bound_states(p, 6, options));
}
BENCHMARK(BM_RadialSolve)->Arg(1000)->Arg(4000)->Arg(16000)->Unit(benchmark::kMillisecond);

static void BM_Integrate(benchmark::State& state) {
  const ModelParams params{3, 0.02, 1.0, 1.0};
  std::mt19937_64 rng(7);
  const auto initial = classical::random_state(3, rng);
  classical::IntegrationOptions options;
  options.tolerance = 1e-10;
  for (auto _ : state)
    benchmark::DoNotOptimize(classical::integrate(params, initial, static_cast<double>(state.range(0)), options));
}
BENCHMARK(BM_Integrate)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
