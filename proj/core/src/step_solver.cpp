#include "rothe/step_solver.hpp"

#include <cmath>
#include <variant>

#include "band_matrix.hpp"

namespace rothe {

namespace {

double resolve_tolerance(const StepConfig& cfg, double h) {
  return cfg.tolerance > 0 ? cfg.tolerance : default_step_tolerance(h);
}

int stencil_bandwidth(const EllipticOperator& op, const Discretization& disc,
                      const Grid& g) {
  const int n0 = g.n(0);
  if (g.dim() == 1) {
    if (disc.scheme == Scheme::monotone && std::holds_alternative<PucciForm>(op.form))
      return frame_radius(disc.frames_for(1));
    return disc.scheme == Scheme::centered ? 2 : 1;
  }
  int bw = n0 + 1;  // axis arms plus the cross/diagonal corners
  if (disc.scheme == Scheme::monotone && std::holds_alternative<PucciForm>(op.form)) {
    for (const auto& fr : disc.frames_for(2))
      for (const auto& e : fr)
        bw = std::max(bw, std::abs(e.d[1]) * n0 + std::abs(e.d[0]));
  }
  if (disc.scheme == Scheme::centered) bw = 2 * n0 + 2;
  return bw;
}

struct RowAdder {
  BandMatrix& J;
  const Grid& g;
  int row;
  void operator()(const NodeIndex& x, double v) const {
    if (g.is_interior(x)) J.add(row, g.linear_index(x), v);
  }
};

// Row of a frozen linear control: -sum a_i D_ii + upwinded b . D + c.
void add_linear_row(const RowAdder& add, const Grid& g, const NodeIndex& x,
                    const double* a_diag, const double* b, double c) {
  for (int axis = 0; axis < g.dim(); ++axis) {
    const double dx = g.dx(axis);
    const double d2 = a_diag[axis] / (dx * dx);
    NodeIndex xp = x, xm = x;
    ++xp[axis];
    --xm[axis];
    add(x, 2.0 * d2);
    add(xp, -d2);
    add(xm, -d2);
    const double bp = std::max(b[axis], 0.0), bm = std::max(-b[axis], 0.0);
    add(x, (bp + bm) / dx);
    add(xm, -bp / dx);
    add(xp, -bm / dx);
  }
  add(x, c);
}

void add_pucci_row(const RowAdder& add, const EllipticOperator& op,
                   const Discretization& disc, const GridFunction& z,
                   const NodeIndex& x, bool is_plus) {
  const Grid& g = z.grid();
  const auto& frames = disc.frames_for(g.dim());
  const Frame& fr =
      frames[pucci_active_frame(z, x, op.lambda, op.Lambda, is_plus, frames)];
  for (const auto& e : fr) {
    const double s = directional_second_difference(z, x, e);
    // phi'(s): -lambda on the positive branch, -Lambda on the negative one
    // (roles swap for the minus operator).
    double slope;
    if (is_plus)
      slope = s > 0 ? -op.lambda : (s < 0 ? -op.Lambda : -op.lambda);
    else
      slope = s > 0 ? -op.Lambda : (s < 0 ? -op.lambda : -op.Lambda);
    double len2 = 0;
    for (int a = 0; a < g.dim(); ++a) {
      const double step = e.d[a] * g.dx(a);
      len2 += step * step;
    }
    const NodeIndex xp = {x[0] + e.d[0], x[1] + e.d[1]};
    const NodeIndex xm = {x[0] - e.d[0], x[1] - e.d[1]};
    add(xp, slope / len2);
    add(xm, slope / len2);
    add(x, -2.0 * slope / len2);
  }
  if (op.gamma > 0) {
    const int sign = is_plus ? +1 : -1;
    const double norm = upwind_gradient_norm(z, x, sign);
    if (norm > 1e-14) {
      for (int axis = 0; axis < g.dim(); ++axis) {
        const double dx = g.dx(axis);
        NodeIndex xp = x, xm = x;
        ++xp[axis];
        --xm[axis];
        const double dminus = (z.at(x) - z.at(xm)) / dx;
        const double dplus = (z.at(xp) - z.at(x)) / dx;
        const double gval = sign > 0 ? std::max({dminus, -dplus, 0.0})
                                     : std::max({dplus, -dminus, 0.0});
        if (gval <= 0) continue;
        const double w = op.gamma * gval / norm;  // same weight for both signs
        if (sign > 0) {
          if (dminus >= -dplus) {
            add(x, w / dx);
            add(xm, -w / dx);
          } else {
            add(x, w / dx);
            add(xp, -w / dx);
          }
        } else {
          // term is -gamma * dual norm
          if (dplus >= -dminus) {
            add(x, w / dx);
            add(xp, -w / dx);
          } else {
            add(x, w / dx);
            add(xm, -w / dx);
          }
        }
      }
    }
  }
}

BandMatrix assemble_jacobian(const EllipticOperator& op, const Discretization& disc,
                             const GridFunction& z, double h, double t,
                             const StepConfig& cfg) {
  const Grid& g = z.grid();
  const int n = g.interior_count();
  BandMatrix J(n, std::min(n - 1, stencil_bandwidth(op, disc, g)));

  const bool analytic = disc.scheme == Scheme::monotone &&
                        !std::holds_alternative<std::monostate>(op.form);
  if (analytic) {
    for (int i = 0; i < n; ++i) {
      const NodeIndex x = g.node(i);
      const RowAdder add{J, g, i};
      if (const auto* lin = std::get_if<LinearForm>(&op.form)) {
        add_linear_row(add, g, x, lin->a.data(), lin->b.data(), lin->c);
      } else if (const auto* pucci = std::get_if<PucciForm>(&op.form)) {
        add_pucci_row(add, op, disc, z, x, pucci->is_plus);
      } else {
        const auto& bell = std::get<BellmanForm>(op.form);
        const Vec xc = g.coord(x);
        const auto& ctl =
            bell.controls[bellman_active_control(bell, z, x, xc, t)];
        double a_diag[2] = {ctl.A(0, 0), g.dim() > 1 ? ctl.A(1, 1) : 0.0};
        add_linear_row(add, g, x, a_diag, ctl.b.c.data(), ctl.c);
      }
      J.add(i, i, 1.0 / h);
    }
    return J;
  }

  // One-sided finite-difference probe restricted to the stencil neighborhood.
  GridFunction zp = z;
  const int rad = disc.scheme == Scheme::centered
                      ? 1
                      : frame_radius(disc.frames_for(g.dim()));
  for (int j = 0; j < n; ++j) {
    const NodeIndex xj = g.node(j);
    const double eps = cfg.fd_epsilon * (1.0 + std::abs(z[j]));
    zp[j] = z[j] + eps;
    for (int di = -rad; di <= rad; ++di)
      for (int dj = -rad; dj <= rad; ++dj) {
        const NodeIndex xi = {xj[0] + di, g.dim() == 1 ? 1 : xj[1] + dj};
        if (!g.is_interior(xi)) continue;
        const int i = g.linear_index(xi);
        const double r1 = discrete_operator_value(op, disc, zp, xi, t);
        const double r0 = discrete_operator_value(op, disc, z, xi, t);
        const double d = (r1 - r0) / eps;
        if (d != 0.0) J.add(i, j, d);
        if (g.dim() == 1) break;
      }
    zp[j] = z[j];
  }
  for (int i = 0; i < n; ++i) J.add(i, i, 1.0 / h);
  return J;
}

double residual_norm(const GridFunction& r) { return r.sup_norm(); }

std::pair<GridFunction, StepSolveReport> newton_solve(
    const EllipticOperator& op, const Discretization& disc,
    const GridFunction& initial, const GridFunction& z_prev, double h, double t,
    const StepConfig& cfg, double tol) {
  const Grid& g = z_prev.grid();
  GridFunction z = initial;
  StepSolveReport rep;
  rep.method_used = StepMethod::newton;
  GridFunction r = assemble_residual(op, disc, z, z_prev, h, t);
  double rn = residual_norm(r);
  for (int iter = 0; iter < cfg.max_newton_iters; ++iter) {
    if (rn <= tol) {
      rep.converged = true;
      break;
    }
    BandMatrix J = assemble_jacobian(op, disc, z, h, t, cfg);
    std::vector<double> d(g.interior_count());
    for (int i = 0; i < g.interior_count(); ++i) d[i] = -r[i];
    if (g.dim() == 1) {
      J.lu_factor();
      J.lu_solve(d);
    } else {
      std::vector<double> sol;
      J.gauss_seidel(d, sol, 1e-2 * tol, 20000);
      d = sol;
    }
    double alpha = cfg.damping;
    bool accepted = false;
    while (alpha >= 1e-8) {
      GridFunction zt = z;
      for (int i = 0; i < zt.size(); ++i) zt[i] = z[i] + alpha * d[i];
      GridFunction rt = assemble_residual(op, disc, zt, z_prev, h, t);
      const double rtn = residual_norm(rt);
      if (rtn < rn) {
        z = zt;
        r = rt;
        rn = rtn;
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    ++rep.iterations;
    if (!accepted) break;  // damping underflow: caller engages the fallback
  }
  if (rn <= tol) rep.converged = true;
  rep.final_residual_norm = rn;
  return {z, rep};
}

}  // namespace

const char* step_method_name(StepMethod m) {
  switch (m) {
    case StepMethod::newton: return "newton";
    case StepMethod::policy_iteration: return "policy_iteration";
    case StepMethod::pseudo_time: return "pseudo_time";
  }
  return "unknown";
}

double default_step_tolerance(double h) { return 1e-10 * (1.0 + 1.0 / h); }

std::pair<GridFunction, StepSolveReport> pseudo_time_relaxation(
    const EllipticOperator& op, const Discretization& disc,
    const GridFunction& z_prev, double h, double t, const StepConfig& cfg) {
  const double tol = resolve_tolerance(cfg, h);
  const double lip = discrete_lipschitz_bound(op, disc, z_prev.grid());
  const double tau =
      cfg.pseudo_time_tau > 0 ? cfg.pseudo_time_tau : 1.0 / (1.0 / h + lip);
  GridFunction z = z_prev;
  StepSolveReport rep;
  rep.method_used = StepMethod::pseudo_time;
  double r0 = -1;
  for (int iter = 0; iter <= cfg.max_pseudo_time_iters; ++iter) {
    GridFunction r = assemble_residual(op, disc, z, z_prev, h, t);
    const double rn = r.sup_norm();
    rep.final_residual_norm = rn;
    if (r0 < 0) r0 = rn;
    if (rn <= tol) {
      rep.converged = true;
      return {z, rep};
    }
    if (!std::isfinite(rn) || rn > 1e6 * (r0 + 1.0)) {
      rep.converged = false;
      throw NonConvergenceError("pseudo-time relaxation diverged", z, rep);
    }
    for (int i = 0; i < z.size(); ++i) z[i] -= tau * r[i];
    ++rep.iterations;
  }
  throw NonConvergenceError("pseudo-time relaxation: iteration cap exhausted", z, rep);
}

std::pair<GridFunction, StepSolveReport> policy_iteration(
    const EllipticOperator& op, const Discretization& disc,
    const GridFunction& z_prev, double h, double t, const StepConfig& cfg) {
  const auto* bell = std::get_if<BellmanForm>(&op.form);
  if (!bell) throw std::invalid_argument("policy_iteration: operator has no Bellman form");
  const Grid& g = z_prev.grid();
  const double tol = resolve_tolerance(cfg, h);
  const int n = g.interior_count();

  GridFunction z = z_prev;
  std::vector<int> policy(n, -1);
  StepSolveReport rep;
  rep.method_used = StepMethod::policy_iteration;
  for (int iter = 0; iter < cfg.max_policy_iters; ++iter) {
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i) {
      const NodeIndex x = g.node(i);
      next[i] = bellman_active_control(*bell, z, x, g.coord(x), t);
    }
    GridFunction r = assemble_residual(op, disc, z, z_prev, h, t);
    rep.final_residual_norm = r.sup_norm();
    if (next == policy && rep.final_residual_norm <= tol) {
      rep.converged = true;
      return {z, rep};
    }
    policy = next;
    // exact banded solve of the frozen-control linear system
    BandMatrix J(n, std::min(n - 1, g.dim() == 1 ? 1 : g.n(0)));
    std::vector<double> rhs(n);
    for (int i = 0; i < n; ++i) {
      const NodeIndex x = g.node(i);
      const auto& ctl = bell->controls[policy[i]];
      double a_diag[2] = {ctl.A(0, 0), g.dim() > 1 ? ctl.A(1, 1) : 0.0};
      add_linear_row(RowAdder{J, g, i}, g, x, a_diag, ctl.b.c.data(), ctl.c);
      J.add(i, i, 1.0 / h);
      const Vec xc = g.coord(x);
      rhs[i] = z_prev[i] / h - (ctl.f ? ctl.f(xc, t) : 0.0);
    }
    J.lu_factor();
    J.lu_solve(rhs);
    for (int i = 0; i < n; ++i) z[i] = rhs[i];
    ++rep.iterations;
  }
  GridFunction r = assemble_residual(op, disc, z, z_prev, h, t);
  rep.final_residual_norm = r.sup_norm();
  rep.converged = rep.final_residual_norm <= tol;
  if (!rep.converged)
    throw NonConvergenceError("policy iteration: cap exhausted", z, rep);
  return {z, rep};
}

std::pair<GridFunction, StepSolveReport> solve_step_from(
    const EllipticOperator& op, const Discretization& disc,
    const GridFunction& initial, const GridFunction& z_prev, double h,
    double t_next, const StepConfig& cfg) {
  if (!(h > 0)) throw std::invalid_argument("solve_step: h must be > 0");
  const double tol = resolve_tolerance(cfg, h);

  auto [z, rep] = newton_solve(op, disc, initial, z_prev, h, t_next, cfg, tol);
  if (!rep.converged && std::holds_alternative<BellmanForm>(op.form)) {
    try {
      auto pr = policy_iteration(op, disc, z_prev, h, t_next, cfg);
      z = pr.first;
      rep = pr.second;
    } catch (const NonConvergenceError&) {
      rep.converged = false;
    }
  }
  if (!rep.converged) {
    auto pt = pseudo_time_relaxation(op, disc, z_prev, h, t_next, cfg);
    z = pt.first;
    rep = pt.second;
  }
  // residual certificate, independent of the solver's bookkeeping
  rep.final_residual_norm = assemble_residual(op, disc, z, z_prev, h, t_next).sup_norm();
  rep.converged = rep.final_residual_norm <= tol;
  if (!rep.converged)
    throw NonConvergenceError("step solve failed on all methods", z, rep);
  return {z, rep};
}

std::pair<GridFunction, StepSolveReport> solve_step(
    const EllipticOperator& op, const Discretization& disc,
    const GridFunction& z_prev, double h, double t_next, const StepConfig& cfg) {
  return solve_step_from(op, disc, z_prev, z_prev, h, t_next, cfg);
}

}  // namespace rothe
