#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rothe/problems.hpp"
#include "rothe/validators.hpp"

using namespace rothe;

TEST_CASE("pucci operators on diagonal matrices") {
  const SymMatrix m = SymMatrix::diagonal({2.0, -3.0});
  // P+ = -lambda Tr(M+) + Lambda Tr(M-), P- swaps the weights.
  CHECK(pucci_plus(m, 1.0, 2.0) == doctest::Approx(-1.0 * 2.0 + 2.0 * 3.0));
  CHECK(pucci_minus(m, 1.0, 2.0) == doctest::Approx(-2.0 * 2.0 + 1.0 * 3.0));
  CHECK(pucci_plus(SymMatrix::zero(2), 1.0, 2.0) == 0.0);
  // On lambda = Lambda both collapse to -lambda Tr.
  CHECK(pucci_plus(m, 1.5, 1.5) == doctest::Approx(-1.5 * m.trace()));
  CHECK(pucci_minus(m, 1.5, 1.5) == doctest::Approx(-1.5 * m.trace()));
  CHECK_THROWS_AS(pucci_plus(m, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(pucci_plus(m, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("pucci rotation invariance") {
  // Rotating the matrix leaves the extremal operators unchanged.
  const double c = std::cos(0.7), s = std::sin(0.7);
  SymMatrix m(2);
  m.set(0, 0, 2.0);
  m.set(1, 1, -3.0);
  // R diag(2,-3) R^T
  SymMatrix r(2);
  r.set(0, 0, 2 * c * c - 3 * s * s);
  r.set(1, 1, 2 * s * s - 3 * c * c);
  r.set(0, 1, (2 + 3) * c * s);
  CHECK(pucci_plus(r, 1.0, 2.0) == doctest::Approx(pucci_plus(m, 1.0, 2.0)));
  CHECK(pucci_minus(r, 1.0, 2.0) == doctest::Approx(pucci_minus(m, 1.0, 2.0)));
}

TEST_CASE("factories expose structure constants") {
  const auto lin = make_linear_operator(2, {1.0, 3.0, 0.0}, {0.5, -0.5, 0.0}, 0.25,
                                        nullptr);
  CHECK(lin.lambda == doctest::Approx(1.0));
  CHECK(lin.Lambda == doctest::Approx(3.0));
  CHECK(lin.gamma >= std::sqrt(0.5));
  CHECK(lin.omega(1.0, 2.0) == doctest::Approx(0.5));

  const auto puc = make_pucci_operator(1, true, 1.0, 2.0, 0.5, nullptr);
  const SymMatrix m = SymMatrix::diagonal({-1.0});
  Vec p(3.0);
  CHECK(puc.eval(m, p, 0, Vec(0.5), 0) ==
        doctest::Approx(pucci_plus(m, 1, 2) + 0.5 * 3.0));
}

TEST_CASE("bellman factory validates controls") {
  BellmanControl bad;
  bad.A = SymMatrix::diagonal({3.0, 1.0});  // eigenvalue above Lambda
  bad.b.dim = 2;
  CHECK_THROWS_AS(make_bellman_operator(2, 1.0, 2.0, {bad}), std::invalid_argument);

  BellmanControl neg;
  neg.A = SymMatrix::diagonal({1.0, 1.0});
  neg.b.dim = 2;
  neg.c = -0.5;
  CHECK_THROWS_AS(make_bellman_operator(2, 1.0, 2.0, {neg}), std::invalid_argument);
}

TEST_CASE("structure validators pass on the catalog") {
  for (const auto& name : problem_catalog()) {
    const TestProblem p = manufactured_problem(name);
    CAPTURE(name);
    const auto ell = check_uniform_ellipticity(p.op, 500, 42);
    CHECK_MESSAGE(ell.pass, ell.witness);
    const auto str = check_structure_condition(p.op, 2.0, 500, 43);
    CHECK_MESSAGE(str.pass, str.witness);
    CHECK(check_boundedness(p.op, 200, 44).pass);
  }
}

TEST_CASE("structure validator rejects a non-elliptic operator") {
  // Backward operator: +Tr(M), violates both ellipticity inequalities.
  EllipticOperator bad;
  bad.dim = 2;
  bad.lambda = 1.0;
  bad.Lambda = 1.0;
  bad.evaluate = [](const SymMatrix& m, const Vec&, double, const Vec&, double) {
    return m.trace();
  };
  CHECK_FALSE(check_uniform_ellipticity(bad, 200, 45).pass);
}

TEST_CASE("manufactured solution satisfies its equation") {
  const TestProblem p1 = manufactured_problem("P1_linear_1d");
  REQUIRE(static_cast<bool>(p1.exact));
  CHECK(residual_probe(p1) <= 1e-6);
  // Zero initial and boundary data.
  CHECK(p1.exact(Vec(0.3), 0.0) == doctest::Approx(0.0));
  CHECK(p1.exact(Vec(0.0), 0.7) == doctest::Approx(0.0));
  CHECK(p1.exact(Vec(1.0), 0.7) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("catalog problems without oracles") {
  CHECK_FALSE(static_cast<bool>(manufactured_problem("P2_pucci_1d").exact));
  CHECK_FALSE(static_cast<bool>(manufactured_problem("P3_bellman_2d").exact));
  CHECK_THROWS_AS(manufactured_problem("P9_unknown"), std::invalid_argument);
}
