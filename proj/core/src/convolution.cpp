#include "rothe/convolution.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rothe {

namespace {

// Scan every node of the closed lattice (indices 0..n+1 per axis; the
// boundary layer carries the value 0).
template <typename Fold>
double scan(const GridFunction& u, const Vec& x, double eps, Fold fold, double init) {
  if (!(eps > 0)) throw std::invalid_argument("convolution: eps must be > 0");
  const Grid& g = u.grid();
  double best = init;
  const int ny = g.dim() > 1 ? g.n(1) + 1 : 0;
  for (int iy = 0; iy <= ny; ++iy)
    for (int ix = 0; ix <= g.n(0) + 1; ++ix) {
      const NodeIndex idx{ix, g.dim() > 1 ? iy : 1};
      const Vec y = g.coord(idx);
      double d2 = 0;
      for (int a = 0; a < g.dim(); ++a) d2 += (x[a] - y[a]) * (x[a] - y[a]);
      best = fold(best, u.at(idx), d2 / (2.0 * eps));
    }
  return best;
}

double sup_at(const GridFunction& u, const Vec& x, double eps) {
  return scan(
      u, x, eps,
      [](double b, double v, double q) { return std::max(b, v - q); },
      -std::numeric_limits<double>::infinity());
}

double inf_at(const GridFunction& u, const Vec& x, double eps) {
  return scan(
      u, x, eps,
      [](double b, double v, double q) { return std::min(b, v + q); },
      std::numeric_limits<double>::infinity());
}

}  // namespace

double sup_convolution_value(const GridFunction& u, const Vec& x, double eps) {
  return sup_at(u, x, eps);
}

double inf_convolution_value(const GridFunction& u, const Vec& x, double eps) {
  return inf_at(u, x, eps);
}

GridFunction sup_convolution(const GridFunction& u, double eps) {
  const Grid& g = u.grid();
  GridFunction out(g);
  for (int i = 0; i < out.size(); ++i) out[i] = sup_at(u, g.coord(g.node(i)), eps);
  return out;
}

GridFunction inf_convolution(const GridFunction& u, double eps) {
  const Grid& g = u.grid();
  GridFunction out(g);
  for (int i = 0; i < out.size(); ++i) out[i] = inf_at(u, g.coord(g.node(i)), eps);
  return out;
}

}  // namespace rothe
