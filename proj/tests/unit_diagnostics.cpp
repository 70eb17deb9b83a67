#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "rothe/diagnostics.hpp"
#include "rothe/problems.hpp"
#include "rothe/touch_test.hpp"

using namespace rothe;

namespace {

RotheSequence march(const std::string& name, int nodes, double h, double T) {
  const auto prob = manufactured_problem(name);
  const Grid g = prob.make_grid(nodes);
  Discretization disc;
  RotheConfig rc;
  rc.h = h;
  rc.T = T;
  return run_rothe(prob.op, disc, g, rc);
}

}  // namespace

TEST_CASE("gronwall bound equals the recursion exactly") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  std::uniform_int_distribution<int> len(0, 50);
  for (int rep = 0; rep < 1000; ++rep) {
    const int n = len(rng);
    std::vector<double> B(n), D(n);
    for (auto& b : B) b = u(rng);
    for (auto& d : D) d = u(rng);
    const double v0 = u(rng);
    CHECK(gronwall_bound(v0, B, D) == gronwall_recursion(v0, B, D));
  }
  // flat coefficients collapse to v0 + n d
  CHECK(gronwall_bound(2.0, std::vector<double>(9, 1.0),
                       std::vector<double>(9, 0.5)) == 2.0 + 9 * 0.5);
  CHECK(gronwall_bound(7.0, {}, {}) == 7.0);
  CHECK_THROWS_AS(gronwall_bound(-1.0, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(gronwall_bound(1.0, {1.0}, {-1.0}), std::invalid_argument);
  CHECK_THROWS_AS(gronwall_bound(1.0, {1.0}, {}), std::invalid_argument);
}

TEST_CASE("spike sup convolution value") {
  // 3 interior nodes on [0,1]; u = (0, 1, 0); at the left boundary point the
  // best tradeoff is the center node: 1 - (1/2)^2 / 2 = 7/8.
  const Grid g(0, 1, 3);
  GridFunction u(g);
  u.set({2, 1}, 1.0);
  CHECK(sup_convolution_value(u, Vec(0.0), 1.0) == doctest::Approx(7.0 / 8.0));
  const GridFunction ue = sup_convolution(u, 1.0);
  CHECK(ue.at({2, 1}) == doctest::Approx(1.0));
  CHECK(semiconvexity_check(u, ue, 1.0).all_pass());
  CHECK(convolution_monotonicity_check(u, 1.0, 0.5).all_pass());
}

TEST_CASE("constant field is a fixed point away from the boundary") {
  const Grid g(0, 1, 63);
  GridFunction u(g);
  for (int i = 0; i < u.size(); ++i) u[i] = 0.75;
  const double eps = 1e-3;  // short range: boundary zeros out of reach
  const GridFunction ue = sup_convolution(u, eps);
  CHECK(ue.at({32, 1}) == doctest::Approx(0.75));
  const GridFunction ui = inf_convolution(u, eps);
  CHECK(ui.at({32, 1}) == doctest::Approx(0.75));
}

TEST_CASE("convolution rejects nonpositive eps") {
  const Grid g(0, 1, 3);
  CHECK_THROWS_AS(sup_convolution(GridFunction(g), 0.0), std::invalid_argument);
}

TEST_CASE("first step and lipschitz reports on the catalog") {
  const RotheSequence seq = march("P1_linear_1d", 31, 0.1, 0.5);
  const auto fs = first_step_report(seq);
  CHECK(fs.all_pass());
  CHECK(fs.checks[1].measured == doctest::Approx(seq.levels[1].sup_norm() / 0.1));
  CHECK(lipschitz_report(seq).all_pass());

  // ladder stability across three step sizes
  std::vector<double> ratios;
  for (double h : {0.1, 0.05, 0.025}) {
    const RotheSequence s = march("P1_linear_1d", 31, h, 0.5);
    ratios.push_back(s.levels[1].sup_norm() / h);
  }
  CHECK(ladder_stability("first_step", ratios, 1e-9).pass);
  CHECK_FALSE(ladder_stability("unstable", {1.0, 5.0}, 1e-9).pass);
}

TEST_CASE("increment estimate on both catalog regimes") {
  const RotheSequence p1 = march("P1_linear_1d", 31, 0.05, 0.5);
  const auto prob1 = manufactured_problem("P1_linear_1d");
  CHECK(increment_report(p1, prob1.op, default_step_tolerance(0.05)).all_pass());

  const RotheSequence p2 = march("P2_pucci_1d", 31, 0.05, 0.5);
  const auto prob2 = manufactured_problem("P2_pucci_1d");
  const auto rep = increment_report(p2, prob2.op, default_step_tolerance(0.05));
  CHECK(rep.all_pass());
  // time-independent: sigma2 = 0, so the worst-excess bound is 2 * tolerance
  CHECK(rep.checks.back().bound == doctest::Approx(2 * default_step_tolerance(0.05)));
}

TEST_CASE("pucci sandwich holds on marched iterates") {
  for (const char* name : {"P1_linear_1d", "P2_pucci_1d"}) {
    CAPTURE(name);
    const RotheSequence seq = march(name, 31, 0.1, 0.5);
    const auto prob = manufactured_problem(name);
    for (int n : {1, 3, 5}) {
      const auto rep = pucci_sandwich_check(prob.op, seq.levels[n - 1], seq.levels[n],
                                            seq.h, n * seq.h,
                                            default_step_tolerance(seq.h));
      CHECK_MESSAGE(rep.all_pass(), name << " step " << n);
    }
  }
}

TEST_CASE("pucci sandwich margins shrink under spatial refinement") {
  // Fixed h; the P2 check's tight side is limited by the gradient upwinding,
  // an O(dx) effect, so halving dx should shrink the measured margin.
  const auto prob = manufactured_problem("P2_pucci_1d");
  double coarse = 0, fine = 0;
  for (int pass = 0; pass < 2; ++pass) {
    const int nodes = pass == 0 ? 31 : 63;
    const RotheSequence seq = march("P2_pucci_1d", nodes, 0.1, 0.3);
    const auto rep = pucci_sandwich_check(prob.op, seq.levels[2], seq.levels[3],
                                          seq.h, 3 * seq.h,
                                          default_step_tolerance(seq.h));
    double tight = std::min(rep.checks[0].margin, rep.checks[1].margin);
    (pass == 0 ? coarse : fine) = std::abs(tight);
  }
  CHECK(fine <= coarse / 1.2);
}

TEST_CASE("touch test accepts the solution and rejects a corrupted one") {
  const RotheSequence seq = march("P1_linear_1d", 31, 0.025, 0.5);
  const auto prob = manufactured_problem("P1_linear_1d");
  Discretization disc;
  TouchTestConfig tc;
  tc.trials = 100;
  const auto good = viscosity_touch_test(prob.op, disc, seq, tc);
  CHECK(good.pass());
  CHECK(good.qualified > 0);

  tc.candidate_scale = 2.0;
  const auto bad = viscosity_touch_test(prob.op, disc, seq, tc);
  CHECK(bad.failed >= 1);
}

TEST_CASE("consistency slack grows with curvature") {
  const Grid g(0, 1, 31);
  const auto prob = manufactured_problem("P1_linear_1d");
  GridFunction flat(g), bumpy(g);
  for (int i = 0; i < bumpy.size(); ++i)
    bumpy[i] = std::sin(2 * 3.14159 * g.coord(g.node(i))[0]);
  CHECK(consistency_slack(bumpy, prob.op) > consistency_slack(flat, prob.op));
}
