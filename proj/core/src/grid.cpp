#include "rothe/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace rothe {

Grid::Grid(double lo, double hi, int n) : dim_(1) {
  if (n < 1) throw std::invalid_argument("Grid: need at least one interior node");
  if (!(hi > lo)) throw std::invalid_argument("Grid: extent must be positive");
  lo_[0] = lo;
  hi_[0] = hi;
  n_[0] = n;
  dx_[0] = (hi - lo) / (n + 1);
}

Grid::Grid(double lox, double hix, int nx, double loy, double hiy, int ny) : dim_(2) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("Grid: need at least one interior node");
  if (!(hix > lox) || !(hiy > loy)) throw std::invalid_argument("Grid: extent must be positive");
  lo_ = {lox, loy};
  hi_ = {hix, hiy};
  n_ = {nx, ny};
  dx_ = {(hix - lox) / (nx + 1), (hiy - loy) / (ny + 1)};
}

double Grid::min_dx() const {
  double m = dx_[0];
  if (dim_ == 2) m = std::min(m, dx_[1]);
  return m;
}

int Grid::interior_count() const { return n_[0] * n_[1]; }

Vec Grid::coord(const NodeIndex& idx) const {
  Vec x;
  x.dim = dim_;
  for (int a = 0; a < dim_; ++a) x[a] = lo_[a] + idx[a] * dx_[a];
  return x;
}

int Grid::linear_index(const NodeIndex& idx) const {
  return (idx[1] - 1) * n_[0] + (idx[0] - 1);
}

NodeIndex Grid::node(int linear) const {
  return {linear % n_[0] + 1, linear / n_[0] + 1};
}

bool Grid::is_interior(const NodeIndex& idx) const {
  for (int a = 0; a < dim_; ++a)
    if (idx[a] < 1 || idx[a] > n_[a]) return false;
  return true;
}

bool Grid::operator==(const Grid& o) const {
  return dim_ == o.dim_ && lo_ == o.lo_ && hi_ == o.hi_ && n_ == o.n_;
}

GridFunction::GridFunction(const Grid& g) : grid_(g), v_(g.interior_count(), 0.0) {}

double GridFunction::at(const NodeIndex& idx) const {
  if (!grid_.is_interior(idx)) return 0.0;
  return v_[grid_.linear_index(idx)];
}

void GridFunction::set(const NodeIndex& idx, double v) {
  if (!grid_.is_interior(idx))
    throw std::out_of_range("GridFunction::set: not an interior node");
  v_[grid_.linear_index(idx)] = v;
}

double GridFunction::sup_norm() const {
  double m = 0;
  for (double v : v_) m = std::max(m, std::abs(v));
  return m;
}

double GridFunction::sup_distance(const GridFunction& o) const {
  if (!(grid_ == o.grid_)) throw std::invalid_argument("sup_distance: grid mismatch");
  double m = 0;
  for (int i = 0; i < size(); ++i) m = std::max(m, std::abs(v_[i] - o.v_[i]));
  return m;
}

GridFunction GridFunction::sample(const Grid& g,
                                  const std::function<double(const Vec&)>& f) {
  GridFunction u(g);
  for (int i = 0; i < u.size(); ++i) u[i] = f(g.coord(g.node(i)));
  return u;
}

std::vector<Frame> default_frames(int dim, bool wide) {
  if (dim == 1) return {{Direction{{1, 0}}}};
  std::vector<Frame> frames = {
      {Direction{{1, 0}}, Direction{{0, 1}}},
      {Direction{{1, 1}}, Direction{{1, -1}}},
  };
  if (wide) {
    frames.push_back({Direction{{2, 1}}, Direction{{-1, 2}}});
    frames.push_back({Direction{{2, -1}}, Direction{{1, 2}}});
  }
  return frames;
}

void validate_frames(int dim, const std::vector<Frame>& frames) {
  if (frames.empty()) throw std::invalid_argument("frames: empty frame set");
  for (const auto& fr : frames) {
    if (static_cast<int>(fr.size()) != dim)
      throw std::invalid_argument("frames: frame size must equal grid dimension");
    for (size_t i = 0; i < fr.size(); ++i) {
      if (fr[i].d[0] == 0 && fr[i].d[1] == 0)
        throw std::invalid_argument("frames: zero direction");
      for (size_t j = i + 1; j < fr.size(); ++j) {
        const int dot = fr[i].d[0] * fr[j].d[0] + fr[i].d[1] * fr[j].d[1];
        if (dot != 0) throw std::invalid_argument("frames: directions not orthogonal");
      }
    }
  }
}

int frame_radius(const std::vector<Frame>& frames) {
  int r = 1;
  for (const auto& fr : frames)
    for (const auto& e : fr) r = std::max({r, std::abs(e.d[0]), std::abs(e.d[1])});
  return r;
}

double directional_second_difference(const GridFunction& u, const NodeIndex& x,
                                     const Direction& e) {
  const Grid& g = u.grid();
  const NodeIndex xp = {x[0] + e.d[0], x[1] + e.d[1]};
  const NodeIndex xm = {x[0] - e.d[0], x[1] - e.d[1]};
  double len2 = 0;
  for (int a = 0; a < g.dim(); ++a) {
    const double step = e.d[a] * g.dx(a);
    len2 += step * step;
  }
  return (u.at(xp) - 2.0 * u.at(x) + u.at(xm)) / len2;
}

SymMatrix discrete_hessian(const GridFunction& u, const NodeIndex& x) {
  const Grid& g = u.grid();
  SymMatrix h(g.dim());
  for (int a = 0; a < g.dim(); ++a) {
    Direction e;
    e.d = {a == 0 ? 1 : 0, a == 1 ? 1 : 0};
    h.set(a, a, directional_second_difference(u, x, e));
  }
  if (g.dim() == 2) {
    const double cross =
        (u.at({x[0] + 1, x[1] + 1}) - u.at({x[0] + 1, x[1] - 1}) -
         u.at({x[0] - 1, x[1] + 1}) + u.at({x[0] - 1, x[1] - 1})) /
        (4.0 * g.dx(0) * g.dx(1));
    h.set(0, 1, cross);
  }
  return h;
}

Vec centered_gradient(const GridFunction& u, const NodeIndex& x) {
  const Grid& g = u.grid();
  Vec p;
  p.dim = g.dim();
  for (int a = 0; a < g.dim(); ++a) {
    NodeIndex xp = x, xm = x;
    ++xp[a];
    --xm[a];
    p[a] = (u.at(xp) - u.at(xm)) / (2.0 * g.dx(a));
  }
  return p;
}

double upwind_gradient_norm(const GridFunction& u, const NodeIndex& x, int sign) {
  const Grid& g = u.grid();
  double s2 = 0;
  for (int a = 0; a < g.dim(); ++a) {
    NodeIndex xp = x, xm = x;
    ++xp[a];
    --xm[a];
    const double dminus = (u.at(x) - u.at(xm)) / g.dx(a);
    const double dplus = (u.at(xp) - u.at(x)) / g.dx(a);
    const double v = sign > 0 ? std::max({dminus, -dplus, 0.0})
                              : std::max({dplus, -dminus, 0.0});
    s2 += v * v;
  }
  return std::sqrt(s2);
}

namespace {
double frame_sum(const GridFunction& u, const NodeIndex& x, const Frame& fr,
                 double coef_pos, double coef_neg) {
  double s = 0;
  for (const auto& e : fr) {
    const double d2 = directional_second_difference(u, x, e);
    s += coef_pos * std::max(d2, 0.0) + coef_neg * std::max(-d2, 0.0);
  }
  return s;
}
}  // namespace

double discrete_pucci_plus(const GridFunction& u, const NodeIndex& x, double lambda,
                           double Lambda, const std::vector<Frame>& frames) {
  double best = 0;
  bool first = true;
  for (const auto& fr : frames) {
    const double s = frame_sum(u, x, fr, -lambda, Lambda);
    if (first || s > best) best = s;
    first = false;
  }
  return best;
}

double discrete_pucci_minus(const GridFunction& u, const NodeIndex& x, double lambda,
                            double Lambda, const std::vector<Frame>& frames) {
  double best = 0;
  bool first = true;
  for (const auto& fr : frames) {
    const double s = frame_sum(u, x, fr, -Lambda, lambda);
    if (first || s < best) best = s;
    first = false;
  }
  return best;
}

}  // namespace rothe
