#include "rothe/discretize.hpp"

#include <cmath>
#include <stdexcept>

namespace rothe {

namespace {

double linear_value(const LinearForm& f, const GridFunction& z, const NodeIndex& x,
                    const Vec& xc, double t) {
  const Grid& g = z.grid();
  double v = f.c * z.at(x);
  for (int a = 0; a < g.dim(); ++a) {
    Direction e;
    e.d = {a == 0 ? 1 : 0, a == 1 ? 1 : 0};
    v -= f.a[a] * directional_second_difference(z, x, e);
    // upwind first-order term: b+ D- u - b- D+ u
    NodeIndex xp = x, xm = x;
    ++xp[a];
    --xm[a];
    const double dminus = (z.at(x) - z.at(xm)) / g.dx(a);
    const double dplus = (z.at(xp) - z.at(x)) / g.dx(a);
    v += std::max(f.b[a], 0.0) * dminus - std::max(-f.b[a], 0.0) * dplus;
  }
  if (f.forcing) v += f.forcing(xc, t);
  return v;
}

}  // namespace

double bellman_control_value(const BellmanControl& ctl, const GridFunction& z,
                             const NodeIndex& x, const Vec& xc, double t) {
  const Grid& g = z.grid();
  double v = ctl.c * z.at(x);
  for (int a = 0; a < g.dim(); ++a) {
    Direction e;
    e.d = {a == 0 ? 1 : 0, a == 1 ? 1 : 0};
    v -= ctl.A(a, a) * directional_second_difference(z, x, e);
    NodeIndex xp = x, xm = x;
    ++xp[a];
    --xm[a];
    const double dminus = (z.at(x) - z.at(xm)) / g.dx(a);
    const double dplus = (z.at(xp) - z.at(x)) / g.dx(a);
    v += std::max(ctl.b[a], 0.0) * dminus - std::max(-ctl.b[a], 0.0) * dplus;
  }
  if (ctl.f) v += ctl.f(xc, t);
  return v;
}

namespace {
void require_diagonal(const SymMatrix& a) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j)
      if (a(i, j) != 0.0)
        throw std::invalid_argument(
            "monotone discretization requires diagonal Bellman coefficients");
}
}  // namespace

int bellman_active_control(const BellmanForm& form, const GridFunction& z,
                           const NodeIndex& x, const Vec& xc, double t) {
  int best = 0;
  double bestv = 0;
  for (size_t k = 0; k < form.controls.size(); ++k) {
    const double v = bellman_control_value(form.controls[k], z, x, xc, t);
    if (k == 0 || (form.is_sup ? v > bestv : v < bestv)) {
      bestv = v;
      best = static_cast<int>(k);
    }
  }
  return best;
}

int pucci_active_frame(const GridFunction& z, const NodeIndex& x, double lambda,
                       double Lambda, bool is_plus, const std::vector<Frame>& frames) {
  int best = 0;
  double bestv = 0;
  for (size_t f = 0; f < frames.size(); ++f) {
    double s = 0;
    for (const auto& e : frames[f]) {
      const double d2 = directional_second_difference(z, x, e);
      s += is_plus ? (-lambda * std::max(d2, 0.0) + Lambda * std::max(-d2, 0.0))
                   : (-Lambda * std::max(d2, 0.0) + lambda * std::max(-d2, 0.0));
    }
    if (f == 0 || (is_plus ? s > bestv : s < bestv)) {
      bestv = s;
      best = static_cast<int>(f);
    }
  }
  return best;
}

const std::vector<Frame>& Discretization::frames_for(int dim) const {
  if (!frames.empty()) return frames;
  static const std::vector<Frame> f1 = default_frames(1);
  static const std::vector<Frame> f2 = default_frames(2);
  return dim == 1 ? f1 : f2;
}

double discrete_operator_value(const EllipticOperator& op, const Discretization& disc,
                               const GridFunction& z, const NodeIndex& x, double t) {
  const Grid& g = z.grid();
  const Vec xc = g.coord(x);
  if (disc.scheme == Scheme::centered) {
    return op.eval(discrete_hessian(z, x), centered_gradient(z, x), z.at(x), xc, t);
  }
  if (const auto* lin = std::get_if<LinearForm>(&op.form)) {
    return linear_value(*lin, z, x, xc, t);
  }
  if (const auto* pucci = std::get_if<PucciForm>(&op.form)) {
    const auto& frames = disc.frames_for(g.dim());
    double v;
    if (pucci->is_plus) {
      v = discrete_pucci_plus(z, x, op.lambda, op.Lambda, frames) +
          op.gamma * upwind_gradient_norm(z, x, +1);
    } else {
      v = discrete_pucci_minus(z, x, op.lambda, op.Lambda, frames) -
          op.gamma * upwind_gradient_norm(z, x, -1);
    }
    if (pucci->forcing) v += pucci->forcing(xc, t);
    return v;
  }
  if (const auto* bell = std::get_if<BellmanForm>(&op.form)) {
    double best = 0;
    bool first = true;
    for (const auto& ctl : bell->controls) {
      require_diagonal(ctl.A);
      const double v = bellman_control_value(ctl, z, x, xc, t);
      if (first || (bell->is_sup ? v > best : v < best)) best = v;
      first = false;
    }
    return best;
  }
  throw std::invalid_argument(
      "monotone discretization needs a structural form; use the centered scheme "
      "for custom operators");
}

GridFunction assemble_residual(const EllipticOperator& op, const Discretization& disc,
                               const GridFunction& z, const GridFunction& z_prev,
                               double h, double t) {
  if (!(h > 0)) throw std::invalid_argument("assemble_residual: h must be > 0");
  if (!(z.grid() == z_prev.grid()))
    throw std::invalid_argument("assemble_residual: grid mismatch");
  const Grid& g = z.grid();
  GridFunction r(g);
  for (int i = 0; i < r.size(); ++i) {
    const NodeIndex x = g.node(i);
    r[i] = discrete_operator_value(op, disc, z, x, t) + z[i] / h - z_prev[i] / h;
  }
  return r;
}

double discrete_lipschitz_bound(const EllipticOperator& op, const Discretization& disc,
                                const Grid& g) {
  const auto& frames = disc.frames_for(g.dim());
  // Stencil arms of the largest frame (two per direction); each end point
  // contributes at most Lambda/|De|^2 <= Lambda/dx^2, the centers another
  // 2 Lambda/|De|^2 per direction.
  size_t dirs = 0;
  for (const auto& fr : frames) dirs = std::max(dirs, fr.size());
  const double arms = 2.0 * static_cast<double>(dirs);
  double c_r = 0;
  if (const auto* lin = std::get_if<LinearForm>(&op.form)) c_r = lin->c;
  if (const auto* bell = std::get_if<BellmanForm>(&op.form))
    for (const auto& ctl : bell->controls) c_r = std::max(c_r, ctl.c);
  const double dx = g.min_dx();
  return 2.0 * arms * op.Lambda / (dx * dx) +
         2.0 * std::sqrt(static_cast<double>(g.dim())) * op.gamma / dx + c_r;
}

}  // namespace rothe
