#include <benchmark/benchmark.h>

#include "sobolev/solver.hpp"

using namespace sobolev;

namespace {

void solve_uniform(benchmark::State& state, Mode mode) {
  const ProblemSpec p = make_problem(static_cast<int>(state.range(0)), parse_weight("poly:1"), mode);
  for (auto _ : state) benchmark::DoNotOptimize(solve(p).mu);
}

void BM_SolveUniformExact(benchmark::State& state) { solve_uniform(state, Mode::Exact); }
void BM_SolveUniformFloat(benchmark::State& state) { solve_uniform(state, Mode::Float); }

void BM_SolveDirac(benchmark::State& state) {
  const ProblemSpec p = make_problem(static_cast<int>(state.range(0)), parse_weight("dirac:1/3"));
  for (auto _ : state) benchmark::DoNotOptimize(solve(p).mu);
}

void BM_SolvePiecewise(benchmark::State& state) {
  const ProblemSpec p =
      make_problem(static_cast<int>(state.range(0)), parse_weight("pw:[0,1/3]=x;[1/3,2/3]=1;[2/3,1]=1-x"));
  for (auto _ : state) benchmark::DoNotOptimize(solve(p).mu);
}

void BM_SolvePowerFloat(benchmark::State& state) {
  const ProblemSpec p = make_problem(static_cast<int>(state.range(0)), parse_weight("pow:1/2"), Mode::Float);
  for (auto _ : state) benchmark::DoNotOptimize(solve(p).mu);
}

void BM_Moments(benchmark::State& state) {
  const Weight w = parse_weight("poly:1+x+x^2");
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(moments(w, k));
}

}  // namespace

BENCHMARK(BM_SolveUniformExact)->DenseRange(1, 5);
BENCHMARK(BM_SolveUniformFloat)->DenseRange(1, 5);
BENCHMARK(BM_SolveDirac)->DenseRange(1, 5);
BENCHMARK(BM_SolvePiecewise)->DenseRange(1, 3);
BENCHMARK(BM_SolvePowerFloat)->DenseRange(1, 3);
BENCHMARK(BM_Moments)->Arg(4)->Arg(8)->Arg(12);
