#include "rothe/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rothe {

namespace {

constexpr double kPi = std::numbers::pi;

TestProblem p1_linear_1d() {
  TestProblem p;
  p.name = "P1_linear_1d";
  p.description =
      "1D linear heat-type operator with exact solution sin(t) sin(pi x)";
  // u*(x,t) = sin(t) sin(pi x), F = -u_xx + g with
  // g(x,t) = -(pi^2 sin t + cos t) sin(pi x) so that u*_t + F(D^2 u*) = 0.
  auto g = [](const Vec& x, double t) {
    return -(kPi * kPi * std::sin(t) + std::cos(t)) * std::sin(kPi * x[0]);
  };
  p.op = make_linear_operator(1, {1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, 0.0, g);
  p.op.time_independent = false;
  // |d g / d t| <= sqrt(pi^4 + 1), hence sigma2(h) <= sqrt(pi^4+1) h.
  const double lip_t = std::sqrt(kPi * kPi * kPi * kPi + 1.0);
  p.op.sigma2 = [lip_t](double h) { return lip_t * h; };
  p.exact = [](const Vec& x, double t) {
    return std::sin(t) * std::sin(kPi * x[0]);
  };
  return p;
}

TestProblem p2_pucci_1d() {
  TestProblem p;
  p.name = "P2_pucci_1d";
  p.description = "1D Pucci-plus operator with a gradient term, forcing -10 sin(pi x)";
  auto f = [](const Vec& x, double) { return -10.0 * std::sin(kPi * x[0]); };
  p.op = make_pucci_operator(1, /*is_plus=*/true, 1.0, 2.0, /*gamma=*/0.5, f);
  return p;
}

TestProblem p3_bellman_2d() {
  TestProblem p;
  p.name = "P3_bellman_2d";
  p.description = "2D two-control Bellman operator (sup form)";
  BellmanControl c1;
  c1.A = SymMatrix(2);
  c1.A.set(0, 0, 1.0);
  c1.A.set(1, 1, 1.0);
  c1.b.dim = 2;
  c1.b.c = {0.0, 0.0, 0.0};
  c1.c = 0.0;
  c1.f = [](const Vec& x, double) {
    return -6.0 * std::sin(kPi * x[0]) * std::sin(kPi * x[1]);
  };
  BellmanControl c2;
  c2.A = SymMatrix(2);
  c2.A.set(0, 0, 2.0);
  c2.A.set(1, 1, 1.0);
  c2.b.dim = 2;
  c2.b.c = {0.3, -0.2, 0.0};
  c2.c = 0.5;
  c2.f = [](const Vec& x, double) {
    return -4.0 * std::sin(kPi * x[0]) * std::sin(2.0 * kPi * x[1]);
  };
  p.op = make_bellman_operator(2, 1.0, 2.0, {c1, c2}, /*is_sup=*/true);
  return p;
}

}  // namespace

Grid TestProblem::make_grid(int n) const {
  return op.dim == 1 ? Grid(lo, hi, n) : Grid(lo, hi, n, lo, hi, n);
}

TestProblem manufactured_problem(const std::string& name) {
  if (name == "P1_linear_1d") return p1_linear_1d();
  if (name == "P2_pucci_1d") return p2_pucci_1d();
  if (name == "P3_bellman_2d") return p3_bellman_2d();
  throw std::invalid_argument("manufactured_problem: unknown name " + name);
}

std::vector<std::string> problem_catalog() {
  return {"P1_linear_1d", "P2_pucci_1d", "P3_bellman_2d"};
}

namespace {

// Fourth-order centered first/second derivative stencils.
double d1(const std::function<double(double)>& f, double x, double s) {
  return (-f(x + 2 * s) + 8 * f(x + s) - 8 * f(x - s) + f(x - 2 * s)) / (12 * s);
}
double d2(const std::function<double(double)>& f, double x, double s) {
  return (-f(x + 2 * s) + 16 * f(x + s) - 30 * f(x) + 16 * f(x - s) -
          f(x - 2 * s)) / (12 * s * s);
}

}  // namespace

double residual_probe(const TestProblem& p, int probe_points, double probe_step) {
  if (!p.exact) throw std::invalid_argument("residual_probe: no exact solution");
  double worst = 0;
  const double span = p.hi - p.lo;
  for (int it = 1; it <= probe_points; ++it) {
    const double t = 0.1 + 0.8 * (it - 1) / std::max(1, probe_points - 1);
    for (int ix = 1; ix <= probe_points; ++ix) {
      const double x0 = p.lo + span * ix / (probe_points + 1);
      for (int iy = 1; iy <= (p.op.dim > 1 ? probe_points : 1); ++iy) {
        Vec x;
        x.dim = p.op.dim;
        x.c = {x0, p.op.dim > 1 ? p.lo + span * iy / (probe_points + 1) : 0.0, 0.0};
        SymMatrix H(p.op.dim);
        Vec grad;
        grad.dim = p.op.dim;
        grad.c = {0, 0, 0};
        for (int a = 0; a < p.op.dim; ++a) {
          auto slice = [&](double s) {
            Vec y = x;
            y.c[a] = s;
            return p.exact(y, t);
          };
          grad.c[a] = d1(slice, x[a], probe_step);
          H.set(a, a, d2(slice, x[a], probe_step));
        }
        if (p.op.dim > 1) {
          auto plane = [&](double sx, double sy) {
            Vec y = x;
            y.c[0] = sx;
            y.c[1] = sy;
            return p.exact(y, t);
          };
          const double s = probe_step;
          const double mixed =
              (plane(x[0] + s, x[1] + s) - plane(x[0] + s, x[1] - s) -
               plane(x[0] - s, x[1] + s) + plane(x[0] - s, x[1] - s)) /
              (4 * s * s);
          H.set(0, 1, mixed);
        }
        auto tslice = [&](double s) { return p.exact(x, s); };
        const double ut = d1(tslice, t, probe_step);
        const double r = ut + p.op.eval(H, grad, p.exact(x, t), x, t);
        worst = std::max(worst, std::abs(r));
      }
    }
  }
  return worst;
}

}  // namespace rothe
