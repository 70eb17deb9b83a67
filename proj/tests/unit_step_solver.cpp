#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "rothe/problems.hpp"
#include "rothe/step_solver.hpp"

using namespace rothe;

namespace {

// One interior node on (0,1): the centered second difference of z with zero
// boundary values is -8z, so F = -z'' + 1 discretizes to 8z + 1 and the
// implicit step has the closed form z1 = -h / (8h + 1).
EllipticOperator single_node_op() {
  return make_linear_operator(1, {1, 0, 0}, {0, 0, 0}, 0,
                              [](const Vec&, double) { return 1.0; });
}

}  // namespace

TEST_CASE("single node closed form") {
  const Grid g(0, 1, 1);
  const auto op = single_node_op();
  Discretization disc;
  StepConfig cfg;
  for (double h : {1.0, 0.5, 0.1, 0.01, 0.001}) {
    const auto [z1, rep1] = solve_step(op, disc, GridFunction(g), h, h, cfg);
    CHECK(rep1.converged);
    CHECK(z1[0] == doctest::Approx(-h / (8 * h + 1)).epsilon(1e-10));
    const auto [z2, rep2] = solve_step(op, disc, z1, h, 2 * h, cfg);
    CHECK(z2[0] == doctest::Approx((z1[0] - h) / (8 * h + 1)).epsilon(1e-10));
    // increments shrink in magnitude
    CHECK(std::abs(z2[0] - z1[0]) <= std::abs(z1[0]) + 1e-12);
  }
}

TEST_CASE("default tolerance scales with 1/h") {
  CHECK(default_step_tolerance(1.0) == doctest::Approx(2e-10));
  CHECK(default_step_tolerance(0.01) > default_step_tolerance(0.1));
}

TEST_CASE("newton solves the pucci problem to tolerance") {
  const auto prob = manufactured_problem("P2_pucci_1d");
  const Grid g = prob.make_grid(31);
  Discretization disc;
  StepConfig cfg;
  const double h = 0.1;
  const auto [z, rep] = solve_step(prob.op, disc, GridFunction(g), h, h, cfg);
  CHECK(rep.converged);
  CHECK(rep.method_used == StepMethod::newton);
  CHECK(rep.final_residual_norm <= default_step_tolerance(h));
  CHECK(z.sup_norm() > 0);
}

TEST_CASE("pseudo time agrees with newton") {
  const auto prob = manufactured_problem("P2_pucci_1d");
  const Grid g = prob.make_grid(15);
  Discretization disc;
  StepConfig cfg;
  const double h = 0.05;
  const auto [zn, rn] = solve_step(prob.op, disc, GridFunction(g), h, h, cfg);
  const auto [zp, rp] = pseudo_time_relaxation(prob.op, disc, GridFunction(g), h, h, cfg);
  CHECK(rp.converged);
  CHECK(zn.sup_distance(zp) <= 10 * default_step_tolerance(h) * h);
}

TEST_CASE("policy iteration agrees with newton on the bellman problem") {
  const auto prob = manufactured_problem("P3_bellman_2d");
  const Grid g = prob.make_grid(11);
  Discretization disc;
  StepConfig cfg;
  const double h = 0.1;
  const auto [zn, rn] = solve_step(prob.op, disc, GridFunction(g), h, h, cfg);
  const auto [zp, rp] = policy_iteration(prob.op, disc, GridFunction(g), h, h, cfg);
  CHECK(rn.converged);
  CHECK(rp.converged);
  CHECK(zn.sup_distance(zp) <= 10 * default_step_tolerance(h) * h);

  const auto lin = single_node_op();
  CHECK_THROWS_AS(policy_iteration(lin, disc, GridFunction(Grid(0, 1, 1)), h, h, cfg),
                  std::invalid_argument);
}

TEST_CASE("random initializations reach the same step solution") {
  const auto prob = manufactured_problem("P2_pucci_1d");
  const Grid g = prob.make_grid(15);
  Discretization disc;
  StepConfig cfg;
  const double h = 0.1;
  const auto [ref, rep] = solve_step(prob.op, disc, GridFunction(g), h, h, cfg);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int rep_i = 0; rep_i < 10; ++rep_i) {
    GridFunction init(g);
    for (int i = 0; i < init.size(); ++i) init[i] = u(rng);
    const auto [z, r] = solve_step_from(prob.op, disc, init, GridFunction(g), h, h, cfg);
    CHECK(r.converged);
    CHECK(ref.sup_distance(z) <= 10 * default_step_tolerance(h) * h);
  }
}

TEST_CASE("discrete comparison principle") {
  const auto prob = manufactured_problem("P2_pucci_1d");
  const Grid g = prob.make_grid(15);
  Discretization disc;
  StepConfig cfg;
  const double h = 0.1;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 0.5);
  for (int rep_i = 0; rep_i < 10; ++rep_i) {
    GridFunction lo(g), hi(g);
    for (int i = 0; i < lo.size(); ++i) {
      lo[i] = u(rng) - 0.5;
      hi[i] = lo[i] + u(rng);
    }
    const auto [zl, rl] = solve_step(prob.op, disc, lo, h, h, cfg);
    const auto [zh, rh] = solve_step(prob.op, disc, hi, h, h, cfg);
    for (int i = 0; i < zl.size(); ++i)
      CHECK(zl[i] <= zh[i] + 10 * default_step_tolerance(h) * h);
  }
}

TEST_CASE("non convergence carries the best iterate") {
  const auto prob = manufactured_problem("P2_pucci_1d");
  const Grid g = prob.make_grid(15);
  Discretization disc;
  StepConfig cfg;
  cfg.max_newton_iters = 0;
  cfg.max_pseudo_time_iters = 3;
  try {
    solve_step(prob.op, disc, GridFunction(g), 0.1, 0.1, cfg);
    FAIL("expected NonConvergenceError");
  } catch (const NonConvergenceError& e) {
    CHECK(e.best.size() == g.interior_count());
    CHECK(e.report.final_residual_norm > 0);
    CHECK_FALSE(e.report.converged);
  }
}

TEST_CASE("invalid step sizes rejected") {
  const auto op = single_node_op();
  const Grid g(0, 1, 1);
  Discretization disc;
  StepConfig cfg;
  CHECK_THROWS_AS(solve_step(op, disc, GridFunction(g), -0.1, 0.1, cfg),
                  std::invalid_argument);
}
