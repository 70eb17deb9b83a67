#include "rothe/elliptic_operator.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace rothe {

namespace {
void require_band(double lambda, double Lambda) {
  if (!(lambda > 0) || !(Lambda >= lambda))
    throw std::invalid_argument("require 0 < lambda <= Lambda");
}
}  // namespace

double pucci_plus(const SymMatrix& m, double lambda, double Lambda) {
  require_band(lambda, Lambda);
  return -lambda * m.trace_positive_part() + Lambda * m.trace_negative_part();
}

double pucci_minus(const SymMatrix& m, double lambda, double Lambda) {
  require_band(lambda, Lambda);
  return -Lambda * m.trace_positive_part() + lambda * m.trace_negative_part();
}

double EllipticOperator::eval(const SymMatrix& m, const Vec& p, double r,
                              const Vec& x, double t) const {
  return evaluate(m, p, r, x, t);
}

double EllipticOperator::omega(double R, double s) const {
  return omega_R ? omega_R(R, s) : 0.0;
}

double EllipticOperator::sigma2_of(double h) const {
  if (time_independent || !sigma2) return 0.0;
  return sigma2(h);
}

EllipticOperator make_linear_operator(int dim, std::array<double, 3> a,
                                      std::array<double, 3> b, double c,
                                      SpaceTimeFn forcing) {
  double amin = a[0], amax = a[0], bnorm2 = 0;
  for (int i = 0; i < dim; ++i) {
    if (!(a[i] > 0)) throw std::invalid_argument("linear operator: a_i must be > 0");
    amin = std::min(amin, a[i]);
    amax = std::max(amax, a[i]);
    bnorm2 += b[i] * b[i];
  }
  if (c < 0) throw std::invalid_argument("linear operator: c must be >= 0");

  EllipticOperator op;
  op.dim = dim;
  op.lambda = amin;
  op.Lambda = amax;
  op.gamma = std::sqrt(bnorm2);
  op.omega_R = [c](double, double s) { return c * s; };
  op.time_independent = !forcing;  // refined by callers with explicit time dependence
  LinearForm form{a, b, c, forcing};
  op.form = form;
  op.evaluate = [dim, a, b, c, forcing](const SymMatrix& m, const Vec& p, double r,
                                        const Vec& x, double t) {
    double v = c * r;
    for (int i = 0; i < dim; ++i) v += -a[i] * m(i, i) + b[i] * p[i];
    if (forcing) v += forcing(x, t);
    return v;
  };
  return op;
}

EllipticOperator make_pucci_operator(int dim, bool is_plus, double lambda,
                                     double Lambda, double gamma, SpaceTimeFn forcing) {
  require_band(lambda, Lambda);
  if (gamma < 0) throw std::invalid_argument("pucci operator: gamma must be >= 0");
  EllipticOperator op;
  op.dim = dim;
  op.lambda = lambda;
  op.Lambda = Lambda;
  op.gamma = gamma;
  op.time_independent = true;
  op.form = PucciForm{is_plus, forcing};
  op.evaluate = [is_plus, lambda, Lambda, gamma, forcing](
                    const SymMatrix& m, const Vec& p, double, const Vec& x, double t) {
    double v = is_plus ? pucci_plus(m, lambda, Lambda) + gamma * p.norm()
                       : pucci_minus(m, lambda, Lambda) - gamma * p.norm();
    if (forcing) v += forcing(x, t);
    return v;
  };
  return op;
}

EllipticOperator make_bellman_operator(int dim, double lambda, double Lambda,
                                       std::vector<BellmanControl> controls,
                                       bool is_sup) {
  require_band(lambda, Lambda);
  if (controls.empty()) throw std::invalid_argument("bellman operator: no controls");
  double gamma = 0, cmax = 0;
  for (const auto& ctl : controls) {
    const auto ev = ctl.A.eigenvalues();
    for (int i = 0; i < ctl.A.dim(); ++i)
      if (ev[i] < lambda - 1e-12 || ev[i] > Lambda + 1e-12)
        throw std::invalid_argument(
            "bellman operator: control eigenvalue outside [lambda, Lambda]");
    if (ctl.c < 0) throw std::invalid_argument("bellman operator: control c < 0");
    gamma = std::max(gamma, ctl.b.norm());
    cmax = std::max(cmax, ctl.c);
  }

  EllipticOperator op;
  op.dim = dim;
  op.lambda = lambda;
  op.Lambda = Lambda;
  op.gamma = gamma;
  op.omega_R = [cmax](double, double s) { return cmax * s; };
  op.time_independent = true;
  BellmanForm form{controls, is_sup};
  op.form = form;
  op.evaluate = [dim, controls = std::move(controls), is_sup](
                    const SymMatrix& m, const Vec& p, double r, const Vec& x, double t) {
    double best = 0;
    bool first = true;
    for (const auto& ctl : controls) {
      double v = ctl.c * r;
      for (int i = 0; i < dim; ++i) {
        v += ctl.b[i] * p[i];
        for (int j = 0; j < dim; ++j) v -= ctl.A(i, j) * m(i, j);
      }
      if (ctl.f) v += ctl.f(x, t);
      if (first || (is_sup ? v > best : v < best)) best = v;
      first = false;
    }
    return best;
  };
  return op;
}

}  // namespace rothe
