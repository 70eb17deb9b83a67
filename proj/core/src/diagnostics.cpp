#include "rothe/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rothe {

bool DiagnosticsReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

void DiagnosticsReport::add(CheckResult c) { checks.push_back(std::move(c)); }

void DiagnosticsReport::add_upper(std::string name, double measured, double bound,
                                  double tol, std::string note) {
  CheckResult c;
  c.name = std::move(name);
  c.measured = measured;
  c.bound = bound;
  c.margin = bound - measured;
  c.tolerance = tol;
  c.pass = c.margin >= -tol;
  c.note = std::move(note);
  checks.push_back(std::move(c));
}

CheckResult ladder_stability(std::string name, const std::vector<double>& values,
                             double floor_value) {
  if (values.empty()) throw std::invalid_argument("ladder_stability: empty ladder");
  double lo = values[0], hi = values[0];
  for (double v : values) {
    const double w = std::max(v, floor_value);
    lo = std::min(lo, w);
    hi = std::max(hi, w);
  }
  lo = std::max(lo, floor_value);
  CheckResult c;
  c.name = std::move(name);
  c.measured = hi / lo;
  c.bound = 4.0;
  c.margin = c.bound - c.measured;
  c.tolerance = 0;
  c.pass = c.margin >= 0;
  c.note = "max/min across refinement levels";
  return c;
}

DiagnosticsReport first_step_report(const RotheSequence& seq) {
  if (seq.steps() < 1) throw std::invalid_argument("first_step_report: no steps");
  DiagnosticsReport rep;
  const double z1 = seq.levels[1].sup_norm();
  CheckResult a;
  a.name = "first_step_sup_norm";
  a.measured = z1;
  a.bound = z1;
  a.margin = 0;
  a.pass = std::isfinite(z1);
  rep.add(a);
  CheckResult b;
  b.name = "first_step_ratio";
  b.measured = z1 / seq.h;
  b.bound = b.measured;
  b.margin = 0;
  b.pass = std::isfinite(b.measured);
  b.note = "||z_1|| / h; bounded independent of h across a ladder";
  rep.add(b);
  return rep;
}

DiagnosticsReport increment_report(const RotheSequence& seq, const EllipticOperator& op,
                                   double solver_tolerance) {
  if (seq.steps() < 2) throw std::invalid_argument("increment_report: need >= 2 steps");
  DiagnosticsReport rep;
  const auto w = seq.increment_norms();
  const double sigma = op.sigma2_of(seq.h);
  for (size_t n = 1; n < w.size(); ++n) {
    rep.add_upper("increment_" + std::to_string(n), w[n],
                  w[n - 1] + seq.h * sigma, 2.0 * solver_tolerance);
  }
  CheckResult worst;
  worst.name = "increment_worst_excess";
  double excess = 0;
  for (size_t n = 1; n < w.size(); ++n)
    excess = std::max(excess, w[n] - w[n - 1] - seq.h * sigma);
  worst.measured = excess;
  worst.bound = 2.0 * solver_tolerance;
  worst.margin = worst.bound - worst.measured;
  worst.tolerance = 0;
  worst.pass = worst.margin >= 0;
  worst.note = op.time_independent ? "time-independent operator: increments non-increasing"
                                   : "bound includes h * sigma2(h)";
  rep.add(worst);
  return rep;
}

DiagnosticsReport lipschitz_report(const RotheSequence& seq) {
  if (seq.steps() < 1) throw std::invalid_argument("lipschitz_report: no steps");
  DiagnosticsReport rep;
  CheckResult c;
  c.name = "lipschitz_in_time";
  c.measured = seq.lipschitz_in_time();
  c.bound = c.measured;
  c.margin = 0;
  c.pass = std::isfinite(c.measured);
  c.note = "L(h) = max_n ||z_{n+1} - z_n|| / h";
  rep.add(c);
  return rep;
}

double gronwall_recursion(double v0, const std::vector<double>& B,
                          const std::vector<double>& D) {
  if (B.size() != D.size())
    throw std::invalid_argument("gronwall: length mismatch");
  if (v0 < 0) throw std::invalid_argument("gronwall: negative v0");
  double v = v0;
  for (size_t i = 0; i < B.size(); ++i) {
    if (B[i] < 0 || D[i] < 0) throw std::invalid_argument("gronwall: negative inputs");
    v = B[i] * v + D[i];
  }
  return v;
}

double gronwall_bound(double v0, const std::vector<double>& B,
                      const std::vector<double>& D) {
  // Horner evaluation of v0 prod B + sum D_i prod_{j>i} B_j; identical
  // arithmetic to the recursion, so equality is exact in floating point.
  return gronwall_recursion(v0, B, D);
}

namespace {

double fourth_difference_sup(const GridFunction& z) {
  // Centered fourth difference per axis with the zero extension; the ghost
  // layer makes the estimate conservative near the boundary, which is the
  // safe direction for a slack budget.
  const Grid& g = z.grid();
  double sup = 0;
  for (int i = 0; i < z.size(); ++i) {
    const NodeIndex x = g.node(i);
    for (int a = 0; a < g.dim(); ++a) {
      NodeIndex m2 = x, m1 = x, p1 = x, p2 = x;
      m2[a] -= 2; m1[a] -= 1; p1[a] += 1; p2[a] += 2;
      const double dx = g.dx(a);
      const double d4 = (z.at(m2) - 4 * z.at(m1) + 6 * z.at(x) - 4 * z.at(p1) +
                         z.at(p2)) / (dx * dx * dx * dx);
      sup = std::max(sup, std::abs(d4));
    }
  }
  return sup;
}

double second_difference_sup(const GridFunction& z) {
  const Grid& g = z.grid();
  double sup = 0;
  for (int i = 0; i < z.size(); ++i) {
    const NodeIndex x = g.node(i);
    const SymMatrix H = discrete_hessian(z, x);
    for (int a = 0; a < g.dim(); ++a)
      for (int b = 0; b < g.dim(); ++b) sup = std::max(sup, std::abs(H(a, b)));
  }
  return sup;
}

}  // namespace

double consistency_slack(const GridFunction& z, const EllipticOperator& op) {
  // Hessian truncation: dx^2/12 * |D^4 z| per diagonal entry, amplified by the
  // ellipticity constant and dimension; gradient mismatch between the
  // solver's one-sided and the check's centered quotients: dx/2 * |D^2 z|
  // times gamma.  Expressed as C_s so the budget is C_s * dx.
  const Grid& g = z.grid();
  const double dx = g.min_dx();
  const double d4 = fourth_difference_sup(z);
  const double d2 = second_difference_sup(z);
  return op.Lambda * g.dim() * dx * d4 / 12.0 + op.gamma * d2 / 2.0;
}

DiagnosticsReport pucci_sandwich_check(const EllipticOperator& op,
                                       const GridFunction& z_n,
                                       const GridFunction& z_np1, double h, double t,
                                       double solver_tolerance) {
  if (!(z_n.grid() == z_np1.grid()))
    throw std::invalid_argument("pucci_sandwich_check: grid mismatch");
  const Grid& g = z_np1.grid();
  const double R = std::max(z_n.sup_norm(), z_np1.sup_norm());
  const double slack = consistency_slack(z_np1, op) * g.min_dx() +
                       solver_tolerance * (1.0 + 1.0 / h);

  Vec zero_p;
  zero_p.dim = g.dim();
  zero_p.c = {0, 0, 0};
  const SymMatrix zero_m(g.dim());

  double worst_lower = std::numeric_limits<double>::infinity();
  double worst_upper = std::numeric_limits<double>::infinity();
  int worst_lower_node = -1, worst_upper_node = -1;
  for (int i = 0; i < z_np1.size(); ++i) {
    const NodeIndex x = g.node(i);
    const Vec xc = g.coord(x);
    const SymMatrix H = discrete_hessian(z_np1, x);
    const Vec grad = centered_gradient(z_np1, x);
    const double gn = grad.norm();
    const double zp = z_np1.at(x);
    const double f = op.eval(zero_m, zero_p, 0.0, xc, t);
    const double lower = pucci_minus(H, op.lambda, op.Lambda) - op.gamma * gn -
                         op.omega(R, std::max(-zp, 0.0)) + zp / h + f;
    const double upper = pucci_plus(H, op.lambda, op.Lambda) + op.gamma * gn +
                         op.omega(R, std::max(zp, 0.0)) + zp / h + f;
    const double mid = z_n.at(x) / h;
    if (mid - lower < worst_lower) {
      worst_lower = mid - lower;
      worst_lower_node = i;
    }
    if (upper - mid < worst_upper) {
      worst_upper = upper - mid;
      worst_upper_node = i;
    }
  }

  DiagnosticsReport rep;
  CheckResult lo;
  lo.name = "pucci_sandwich_lower";
  lo.measured = worst_lower;
  lo.bound = 0;
  lo.margin = worst_lower;
  lo.tolerance = slack;
  lo.pass = lo.margin >= -slack;
  lo.note = "worst node " + std::to_string(worst_lower_node) +
            "; pointwise discrete reading of a viscosity inequality";
  rep.add(lo);
  CheckResult up = lo;
  up.name = "pucci_sandwich_upper";
  up.measured = worst_upper;
  up.margin = worst_upper;
  up.pass = up.margin >= -slack;
  up.note = "worst node " + std::to_string(worst_upper_node) +
            "; pointwise discrete reading of a viscosity inequality";
  rep.add(up);
  return rep;
}

DiagnosticsReport semiconvexity_check(const GridFunction& u, const GridFunction& u_eps,
                                      double eps) {
  if (!(eps > 0)) throw std::invalid_argument("semiconvexity_check: eps must be > 0");
  const Grid& g = u_eps.grid();
  const double slack = 1e-9 * (1.0 + 1.0 / eps);
  double worst_curvature = std::numeric_limits<double>::infinity();
  const auto frames = default_frames(g.dim());
  for (int i = 0; i < u_eps.size(); ++i) {
    const NodeIndex x = g.node(i);
    for (const auto& fr : frames)
      for (const auto& e : fr) {
        // The zero extension is not the sup-convolution's boundary value, so
        // only stencils that stay interior see the semiconvex envelope.
        const NodeIndex xp{x[0] + e.d[0], x[1] + e.d[1]};
        const NodeIndex xm{x[0] - e.d[0], x[1] - e.d[1]};
        if (!g.is_interior(xp) || !g.is_interior(xm)) continue;
        worst_curvature =
            std::min(worst_curvature, directional_second_difference(u_eps, x, e));
      }
  }
  if (!std::isfinite(worst_curvature)) worst_curvature = 0;
  double worst_dominance = std::numeric_limits<double>::infinity();
  for (int i = 0; i < u.size(); ++i)
    worst_dominance = std::min(worst_dominance, u_eps[i] - u[i]);

  DiagnosticsReport rep;
  CheckResult c;
  c.name = "semiconvexity_curvature";
  c.measured = worst_curvature;
  c.bound = -1.0 / eps;
  c.margin = worst_curvature + 1.0 / eps;
  c.tolerance = slack;
  c.pass = c.margin >= -slack;
  c.note = "min directional second difference of the sup-convolution";
  rep.add(c);
  CheckResult d;
  d.name = "sup_convolution_dominates";
  d.measured = worst_dominance;
  d.bound = 0;
  d.margin = worst_dominance;
  d.tolerance = 1e-12;
  d.pass = d.margin >= -d.tolerance;
  d.note = "u^eps >= u nodewise";
  rep.add(d);
  return rep;
}

DiagnosticsReport convolution_monotonicity_check(const GridFunction& u, double eps1,
                                                 double eps2) {
  if (!(eps1 >= eps2) || !(eps2 > 0))
    throw std::invalid_argument("convolution_monotonicity_check: need eps1 >= eps2 > 0");
  const GridFunction a = sup_convolution(u, eps1);
  const GridFunction b = sup_convolution(u, eps2);
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < u.size(); ++i) worst = std::min(worst, a[i] - b[i]);

  GridFunction neg = u;
  for (int i = 0; i < neg.size(); ++i) neg[i] = -u[i];
  const GridFunction dual = sup_convolution(neg, eps2);
  const GridFunction inf = inf_convolution(u, eps2);
  double dual_err = 0;
  for (int i = 0; i < u.size(); ++i)
    dual_err = std::max(dual_err, std::abs(inf[i] + dual[i]));

  DiagnosticsReport rep;
  CheckResult c;
  c.name = "sup_convolution_monotone_in_eps";
  c.measured = worst;
  c.bound = 0;
  c.margin = worst;
  c.tolerance = 1e-12;
  c.pass = c.margin >= -c.tolerance;
  c.note = "u^{eps1} >= u^{eps2} nodewise for eps1 >= eps2";
  rep.add(c);
  rep.add_upper("convolution_duality", dual_err, 0, 0,
                "inf_conv(u) == -sup_conv(-u) exactly");
  return rep;
}

}  // namespace rothe
