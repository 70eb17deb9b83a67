#include <benchmark/benchmark.h>

#include "rothe/convolution.hpp"
#include "rothe/problems.hpp"
#include "rothe/step_solver.hpp"

namespace {

void BM_pucci_eval(benchmark::State& state) {
  rothe::SymMatrix m = rothe::SymMatrix::diagonal({1.5, -0.5, 0.25});
  for (auto _ : state)
    benchmark::DoNotOptimize(rothe::pucci_plus(m, 1.0, 2.0));
}
BENCHMARK(BM_pucci_eval);

void BM_step_solve(benchmark::State& state) {
  const auto prob = rothe::manufactured_problem("P2_pucci_1d");
  const rothe::Grid g = prob.make_grid(static_cast<int>(state.range(0)));
  rothe::Discretization disc;
  rothe::GridFunction z0(g);
  rothe::StepConfig cfg;
  for (auto _ : state)
    benchmark::DoNotOptimize(rothe::solve_step(prob.op, disc, z0, 0.05, 0.05, cfg));
}
BENCHMARK(BM_step_solve)->Arg(63)->Arg(255);

void BM_sup_convolution(benchmark::State& state) {
  const rothe::Grid g(0, 1, static_cast<int>(state.range(0)));
  rothe::GridFunction u(g);
  for (int i = 0; i < u.size(); ++i) u[i] = (i % 3) * 0.25;
  for (auto _ : state)
    benchmark::DoNotOptimize(rothe::sup_convolution(u, 0.5));
}
BENCHMARK(BM_sup_convolution)->Arg(63)->Arg(255);

}  // namespace

BENCHMARK_MAIN();
