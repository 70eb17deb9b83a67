#pragma once

#include "rothe/elliptic_operator.hpp"
#include "rothe/grid.hpp"

namespace rothe {

enum class Scheme { monotone, centered };

/// Spatial discretization choice.  "monotone" is the default and the only
/// mode used by the theorem diagnostics; "centered" evaluates F on the
/// centered discrete Hessian/gradient and is meant for smooth linear forms
/// in convergence studies.
struct Discretization {
  Scheme scheme = Scheme::monotone;
  std::vector<Frame> frames;  // empty => default_frames(grid dim)

  const std::vector<Frame>& frames_for(int dim) const;
};

/// F_h(z)(x) at time t.  The monotone path dispatches on the operator's
/// structural form (linear/Pucci/Bellman) and throws std::invalid_argument
/// for operators registered without one.
double discrete_operator_value(const EllipticOperator& op, const Discretization& disc,
                               const GridFunction& z, const NodeIndex& x, double t);

/// R(z)(x) = F_h(z)(x) + z(x)/h - z_prev(x)/h at every interior node;
/// R == 0 characterizes the implicit step solution at time t.
GridFunction assemble_residual(const EllipticOperator& op, const Discretization& disc,
                               const GridFunction& z, const GridFunction& z_prev,
                               double h, double t);

/// Bound on the Lipschitz constant of z -> F_h(z)(x) in the sup norm, used to
/// size the pseudo-time step.  Counts stencil arms of the active frame set.
double discrete_lipschitz_bound(const EllipticOperator& op, const Discretization& disc,
                                const Grid& g);

/// Value of one frozen Bellman control at a node (monotone upwind stencil).
double bellman_control_value(const BellmanControl& ctl, const GridFunction& z,
                             const NodeIndex& x, const Vec& xc, double t);

/// Index of the control attaining the sup (resp. inf) at a node.
int bellman_active_control(const BellmanForm& form, const GridFunction& z,
                           const NodeIndex& x, const Vec& xc, double t);

/// Index of the frame attaining the discrete Pucci max (plus) / min (minus).
int pucci_active_frame(const GridFunction& z, const NodeIndex& x, double lambda,
                       double Lambda, bool is_plus, const std::vector<Frame>& frames);

}  // namespace rothe
