#include <benchmark/benchmark.h>

#include <cmath>
#include <limits>

#include "solvable/expr.hpp"
#include "solvable/fd_hamiltonian.hpp"
#include "solvable/generator.hpp"
#include "solvable/poly.hpp"
#include "solvable/quadrature.hpp"
#include "solvable/schrodinger.hpp"

namespace {

using namespace solvable;

void BM_FdLowestFive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const oracle::FDHamiltonian h([](double x) { return x * x - 1; }, -10, 10, n);
    benchmark::DoNotOptimize(oracle::lowest_eigenvalues(h, 5));
  }
}
BENCHMARK(BM_FdLowestFive)->Arg(1000)->Arg(4000)->Arg(16000)->Unit(benchmark::kMillisecond);

void BM_QuadratureGaussian(benchmark::State& state) {
  const double inf = std::numeric_limits<double>::infinity();
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle::integrate([](double s) { return std::exp(-s * s); }, Interval{-inf, inf}, 1e-12));
}
BENCHMARK(BM_QuadratureGaussian)->Unit(benchmark::kMicrosecond);

void BM_Phi(benchmark::State& state) {
  const FamilySpec f(SigmaCase::OneMinusS2, -5.0, 1.0);
  const int ell = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(phi(f, ell));
}
BENCHMARK(BM_Phi)->Arg(4)->Arg(16)->Arg(64);

void BM_PhiRodrigues(benchmark::State& state) {
  const FamilySpec f(SigmaCase::OneMinusS2, -5.0, 1.0);
  const int ell = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(phi_rodrigues(f, ell));
}
BENCHMARK(BM_PhiRodrigues)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_DifferentiateTwice(benchmark::State& state) {
  const ir::Expr psi = gen::solve_params_quantsys(1.0, 0.0, 3, 1).psi;
  for (auto _ : state) benchmark::DoNotOptimize(ir::derivative(psi, 2));
}
BENCHMARK(BM_DifferentiateTwice)->Unit(benchmark::kMicrosecond);

void BM_EvaluateWavefunction(benchmark::State& state) {
  const ir::Expr psi = wavefunction(FamilySpec(SigmaCase::S2, -7.0, 1.0), 3, 1);
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ir::evaluate(psi, x));
    x = x < 2 ? x + 1e-3 : 0.1;
  }
}
BENCHMARK(BM_EvaluateWavefunction);

void BM_PotentialConstruction(benchmark::State& state) {
  const FamilySpec f(SigmaCase::S2Plus1, -5.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(potential(f, 1));
}
BENCHMARK(BM_PotentialConstruction)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
