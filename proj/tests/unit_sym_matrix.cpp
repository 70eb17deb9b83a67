#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "rothe/sym_matrix.hpp"

using rothe::SymMatrix;

TEST_CASE("construction and symmetry") {
  SymMatrix m(2);
  m.set(0, 1, 3.0);
  CHECK(m(0, 1) == 3.0);
  CHECK(m(1, 0) == 3.0);

  const double bad[4] = {1, 2, 3, 4};
  CHECK_THROWS_AS(SymMatrix::from_rows(2, bad), std::invalid_argument);
  const double good[4] = {1, 2, 2, 4};
  CHECK_NOTHROW(SymMatrix::from_rows(2, good));
}

TEST_CASE("eigenvalues 1d and 2d closed forms") {
  CHECK(SymMatrix::diagonal({-3.5}).eigenvalues()[0] == doctest::Approx(-3.5));

  SymMatrix m(2);
  m.set(0, 0, 2.0);
  m.set(1, 1, 2.0);
  m.set(0, 1, 1.0);
  const auto ev = m.eigenvalues();
  CHECK(ev[0] == doctest::Approx(1.0));
  CHECK(ev[1] == doctest::Approx(3.0));
}

TEST_CASE("eigenvalues 3d jacobi vs characteristic invariants") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int rep = 0; rep < 200; ++rep) {
    SymMatrix m(3);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) m.set(i, j, u(rng));
    const auto ev = m.eigenvalues();
    CHECK(ev[0] <= ev[1]);
    CHECK(ev[1] <= ev[2]);
    CHECK(ev[0] + ev[1] + ev[2] == doctest::Approx(m.trace()).epsilon(1e-9));
    // second invariant: sum of principal 2x2 minors
    double minors = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        minors += m(i, i) * m(j, j) - m(i, j) * m(i, j);
    CHECK(ev[0] * ev[1] + ev[0] * ev[2] + ev[1] * ev[2] ==
          doctest::Approx(minors).epsilon(1e-8));
  }
}

TEST_CASE("positive and negative parts") {
  SymMatrix m(2);
  m.set(0, 0, 3.0);
  m.set(1, 1, -1.0);
  m.set(0, 1, 0.0);
  CHECK(m.trace_positive_part() == doctest::Approx(3.0));
  CHECK(m.trace_negative_part() == doctest::Approx(1.0));
  const SymMatrix p = m.positive_part(), n = m.negative_part();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(p(i, j) - n(i, j) == doctest::Approx(m(i, j)));
  CHECK(p.eigenvalues()[0] >= -1e-12);
  CHECK(n.eigenvalues()[0] >= -1e-12);
}

TEST_CASE("decomposition identity on random 3d matrices") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int rep = 0; rep < 100; ++rep) {
    SymMatrix m(3);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) m.set(i, j, u(rng));
    const SymMatrix d = m.positive_part() - m.negative_part();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(d(i, j) == doctest::Approx(m(i, j)).epsilon(1e-9));
    CHECK(m.nuclear_norm() ==
          doctest::Approx(m.trace_positive_part() + m.trace_negative_part()));
    CHECK(m.spectral_norm() >= m.nuclear_norm() / 3 - 1e-12);
  }
}

TEST_CASE("norms") {
  SymMatrix m = SymMatrix::diagonal({2.0, -5.0});
  CHECK(m.spectral_norm() == doctest::Approx(5.0));
  CHECK(m.nuclear_norm() == doctest::Approx(7.0));
  CHECK(SymMatrix::zero(3).nuclear_norm() == 0.0);
  CHECK(SymMatrix::identity(3).trace() == doctest::Approx(3.0));
}
