#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "rothe/discretize.hpp"

namespace rothe {

struct StepConfig {
  /// Sup-norm residual target; <= 0 selects the default
  /// 1e-10 * (1 + 1/h), scaled because the equation carries a 1/h term.
  double tolerance = 0;
  int max_newton_iters = 60;
  int max_policy_iters = 100;
  int max_pseudo_time_iters = 2000000;
  double damping = 1.0;       // initial Newton step factor in (0,1]
  double fd_epsilon = 1e-7;   // finite-difference Jacobian probe scale
  double pseudo_time_tau = 0; // 0 => derived from the discrete Lipschitz bound
};

enum class StepMethod { newton, policy_iteration, pseudo_time };

struct StepSolveReport {
  StepMethod method_used = StepMethod::newton;
  int iterations = 0;
  double final_residual_norm = 0;
  bool converged = false;
};

const char* step_method_name(StepMethod m);

class NonConvergenceError : public std::runtime_error {
public:
  NonConvergenceError(std::string msg, GridFunction best_iterate, StepSolveReport rep)
      : std::runtime_error(std::move(msg)), best(std::move(best_iterate)), report(rep) {}
  GridFunction best;
  StepSolveReport report;
  int step_index = -1;  // filled by the Rothe driver
};

double default_step_tolerance(double h);

/// Solves the implicit step F_h(z) + z/h = z_prev/h at time t_next:
/// semismooth Newton first, policy iteration for Bellman forms, pseudo-time
/// relaxation as the always-converging fallback.  The returned iterate is
/// re-certified against assemble_residual.  Throws NonConvergenceError with
/// the best iterate when every tier exhausts its cap.
std::pair<GridFunction, StepSolveReport> solve_step(
    const EllipticOperator& op, const Discretization& disc,
    const GridFunction& z_prev, double h, double t_next, const StepConfig& cfg);

/// Same, but from an explicit initial iterate (used by the uniqueness
/// diagnostics; the default initial iterate is z_prev).
std::pair<GridFunction, StepSolveReport> solve_step_from(
    const EllipticOperator& op, const Discretization& disc,
    const GridFunction& initial, const GridFunction& z_prev, double h,
    double t_next, const StepConfig& cfg);

/// z <- z - tau R(z) with tau <= (1/h + L_h)^{-1}; contraction by
/// monotonicity of the scheme plus the strictly monotone 1/h term.
std::pair<GridFunction, StepSolveReport> pseudo_time_relaxation(
    const EllipticOperator& op, const Discretization& disc,
    const GridFunction& z_prev, double h, double t_next, const StepConfig& cfg);

/// Howard's method for Bellman forms: pointwise argmax control selection
/// alternating with exact banded solves of the frozen-control linear system.
/// Throws std::invalid_argument if the operator has no Bellman form.
std::pair<GridFunction, StepSolveReport> policy_iteration(
    const EllipticOperator& op, const Discretization& disc,
    const GridFunction& z_prev, double h, double t_next, const StepConfig& cfg);

}  // namespace rothe
