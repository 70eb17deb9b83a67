#pragma once

#include <vector>

#include "rothe/step_solver.hpp"

namespace rothe {

/// The full backward-Euler time march: levels[0] is the zero initial datum,
/// levels[n] approximates u(., n h).  reports[n-1] describes the solve that
/// produced levels[n].
struct RotheSequence {
  double h = 0;
  double T = 0;
  std::vector<GridFunction> levels;
  std::vector<StepSolveReport> reports;

  int steps() const { return static_cast<int>(levels.size()) - 1; }

  /// Piecewise-linear interpolant in time, clamped to [0, T].
  GridFunction interpolate(double t) const;

  /// max_n ||z_n - z_{n-1}|| / h, the discrete Lipschitz-in-time constant.
  double lipschitz_in_time() const;

  /// ||z_n - z_{n-1}|| for n = 1..N.
  std::vector<double> increment_norms() const;
};

struct RotheConfig {
  double h = 0.1;   // must lie in (0, 1]
  double T = 1.0;   // final time, > 0; the last step is shortened to land on T
  StepConfig step;
};

/// Runs the march from the zero initial level.  NonConvergenceError from a
/// step is rethrown with step_index set to the failing level.
RotheSequence run_rothe(const EllipticOperator& op, const Discretization& disc,
                        const Grid& g, const RotheConfig& cfg);

/// Same, but from a caller-supplied initial level (perturbation studies).
RotheSequence run_rothe_from(const EllipticOperator& op, const Discretization& disc,
                             const GridFunction& initial, const RotheConfig& cfg);

/// One row of a step-refinement study at fixed spatial grid.
struct RefinementLevel {
  double h = 0;
  double error = 0;         // sup-norm distance to the reference or exact field
  double observed_order = 0;  // log2(prev error / error); 0 on the first row
};

/// Runs the march at h, h/2, h/4, ... (levels halvings) and measures the
/// final-time sup distance either to `exact` (when provided) or to the next
/// finer level (Cauchy differences).
std::vector<RefinementLevel> refinement_ladder(
    const EllipticOperator& op, const Discretization& disc, const Grid& g,
    const RotheConfig& cfg, int levels,
    const std::function<double(const Vec&, double)>& exact = nullptr);

}  // namespace rothe
