#pragma once

#include <string>
#include <vector>

#include "rothe/convolution.hpp"
#include "rothe/rothe_driver.hpp"

namespace rothe {

/// One named estimate check.  pass <=> margin >= -tolerance; margin is
/// oriented so that larger is safer (bound minus measured for upper bounds).
struct CheckResult {
  std::string name;
  double measured = 0;
  double bound = 0;
  double margin = 0;
  double tolerance = 0;
  bool pass = false;
  std::string note;
};

struct DiagnosticsReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  void add(CheckResult c);
  /// Convenience: build margin/pass from measured <= bound + tolerance.
  void add_upper(std::string name, double measured, double bound, double tol,
                 std::string note = {});
};

/// max/min stability of a positive quantity across a refinement ladder; the
/// estimate constants are existential, so "bounded independent of h" is
/// checked as max/min <= 4 across levels (values below `floor` are treated as
/// at the floor so an all-tiny ladder passes).
CheckResult ladder_stability(std::string name, const std::vector<double>& values,
                             double floor_value);

/// ||z_1||_inf and ||z_1||_inf / h for the first implicit step.
DiagnosticsReport first_step_report(const RotheSequence& seq);

/// Increment decay: ||w_n|| <= ||w_{n-1}|| + h sigma2(h) + 2 tol for every n,
/// with w_n = z_{n+1} - z_n and tol the step-solver residual tolerance.
DiagnosticsReport increment_report(const RotheSequence& seq, const EllipticOperator& op,
                                   double solver_tolerance);

/// L(h) = max_n ||w_n||/h, the discrete Lipschitz-in-time constant.
DiagnosticsReport lipschitz_report(const RotheSequence& seq);

/// v0 prod B_i + sum_i D_i prod_{j>i} B_j, evaluated by the Horner recursion
/// acc <- B_i acc + D_i so it agrees bit-for-bit with gronwall_recursion.
/// Throws std::invalid_argument on negative inputs or length mismatch.
double gronwall_bound(double v0, const std::vector<double>& B,
                      const std::vector<double>& D);

/// The extremal recursion v_{i+1} = B_i v_i + D_i; the bound above is its
/// equality case.
double gronwall_recursion(double v0, const std::vector<double>& B,
                          const std::vector<double>& D);

/// Consistency budget of the discrete Hessian/gradient at this iterate:
/// an estimate of C_s such that the pointwise evaluation of a continuum
/// inequality can be off by at most C_s * dx.  Built from discrete second-
/// and fourth-difference probes of z.
double consistency_slack(const GridFunction& z, const EllipticOperator& op);

/// Both sides of the extremal-operator sandwich
///   P^-(D^2 z_+) - gamma|Dz_+| - omega((-z_+)^+) + z_+/h + f
///     <= z_n/h <=
///   P^+(D^2 z_+) + gamma|Dz_+| + omega(z_+^+) + z_+/h + f
/// evaluated with the discrete Hessian and centered gradient of z_+ = z_{n+1},
/// f(x) = F(0,0,0,x,t).  Slack: consistency_slack * dx + tol * (1 + 1/h).
DiagnosticsReport pucci_sandwich_check(const EllipticOperator& op,
                                       const GridFunction& z_n,
                                       const GridFunction& z_np1, double h, double t,
                                       double solver_tolerance);

/// Semiconvexity of the sup-convolution: every directional second difference
/// of u_eps is >= -1/eps - slack, and u_eps >= u nodewise.
DiagnosticsReport semiconvexity_check(const GridFunction& u, const GridFunction& u_eps,
                                      double eps);

/// u^{eps1} >= u^{eps2} nodewise for eps1 >= eps2 plus the duality
/// inf_conv(u) = -sup_conv(-u).
DiagnosticsReport convolution_monotonicity_check(const GridFunction& u, double eps1,
                                                 double eps2);

}  // namespace rothe
