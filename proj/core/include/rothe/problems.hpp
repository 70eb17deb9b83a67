#pragma once

#include <optional>
#include <string>

#include "rothe/discretize.hpp"

namespace rothe {

/// A catalog problem: operator, default domain, and (when constructed by
/// manufacture) an exact solution vanishing on the parabolic boundary.
struct TestProblem {
  std::string name;
  std::string description;
  EllipticOperator op;
  double lo = 0, hi = 1;   // square domain per axis
  SpaceTimeFn exact;       // null for the property-based problems

  Grid make_grid(int n) const;
};

/// Catalog: P1_linear_1d (heat-type linear operator with an exact solution),
/// P2_pucci_1d (Pucci-plus with a gradient term, property-based),
/// P3_bellman_2d (two-control Bellman operator, property-based).
/// Throws std::invalid_argument on unknown names.
TestProblem manufactured_problem(const std::string& name);

std::vector<std::string> problem_catalog();

/// Max |u_t + F(D^2 u, Du, u, x, t)| of the exact solution over an interior
/// probe lattice, derivatives taken by fourth-order centered differences with
/// step `probe_step`.  Used to certify the manufactured algebra (<= 1e-6).
double residual_probe(const TestProblem& p, int probe_points = 9,
                      double probe_step = 0.01);

}  // namespace rothe
