#include <benchmark/benchmark.h>

#include <cmath>

#include "sobolev/oracle.hpp"
#include "sobolev/quadrature.hpp"
#include "sobolev/solver.hpp"

using namespace sobolev;

namespace {

void BM_GalerkinExact(benchmark::State& state) {
  const ProblemSpec p = make_problem(1, parse_weight("dirac:1/2"));
  GalerkinConfig cfg;
  cfg.degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(galerkin_lambda(p, cfg).lambda_estimate);
}

void BM_GalerkinLegendre(benchmark::State& state) {
  const ProblemSpec p = make_problem(1, parse_weight("chi:1/4,3/4"), Mode::Float);
  GalerkinConfig cfg;
  cfg.degree = static_cast<int>(state.range(0));
  cfg.mode = Mode::Float;
  cfg.basis = GalerkinBasis::Legendre;
  for (auto _ : state) benchmark::DoNotOptimize(galerkin_lambda(p, cfg).lambda_estimate);
}

void BM_SignIteration(benchmark::State& state) {
  const ProblemSpec p = make_problem(2, parse_weight("poly:1+x"), Mode::Float);
  SignIterationConfig cfg;
  cfg.grid = static_cast<int>(state.range(0));
  cfg.restarts = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sign_iteration(p, cfg).lambda_estimate);
}

void BM_QuadSingular(benchmark::State& state) {
  const auto f = [](double t) { return std::pow(t, -0.75) * std::cos(t); };
  for (auto _ : state) benchmark::DoNotOptimize(quad_numeric(f, 0.0, 1.0).value);
}

}  // namespace

BENCHMARK(BM_GalerkinExact)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_GalerkinLegendre)->Arg(40)->Arg(120)->Arg(240);
BENCHMARK(BM_SignIteration)->Arg(99)->Arg(399);
BENCHMARK(BM_QuadSingular);
