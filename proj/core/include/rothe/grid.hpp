#pragma once

#include <array>
#include <functional>
#include <vector>

#include "rothe/sym_matrix.hpp"
#include "rothe/vec.hpp"

namespace rothe {

/// Interior node index, 1-based per axis; 0 and n+1 are the boundary layers.
using NodeIndex = std::array<int, 2>;

/// Uniform Cartesian grid on an interval (1D) or rectangle (2D) with
/// homogeneous Dirichlet boundary.  Node coordinates are reproduced
/// bit-exactly from indices.
class Grid {
public:
  Grid(double lo, double hi, int n);  // 1D
  Grid(double lox, double hix, int nx, double loy, double hiy, int ny);  // 2D

  int dim() const { return dim_; }
  int n(int axis) const { return n_[axis]; }
  double lo(int axis) const { return lo_[axis]; }
  double hi(int axis) const { return hi_[axis]; }
  double dx(int axis) const { return dx_[axis]; }
  double min_dx() const;
  int interior_count() const;

  Vec coord(const NodeIndex& idx) const;
  int linear_index(const NodeIndex& idx) const;
  NodeIndex node(int linear) const;
  bool is_interior(const NodeIndex& idx) const;

  bool operator==(const Grid& o) const;

private:
  int dim_;
  std::array<double, 2> lo_{}, hi_{}, dx_{};
  std::array<int, 2> n_{1, 1};
};

/// Real values on the interior nodes; the boundary trace is 0 by construction
/// and reads outside the interior return 0 (one-ghost-layer zero extension).
class GridFunction {
public:
  explicit GridFunction(const Grid& g);

  const Grid& grid() const { return grid_; }
  int size() const { return static_cast<int>(v_.size()); }
  double& operator[](int linear) { return v_[linear]; }
  double operator[](int linear) const { return v_[linear]; }
  double at(const NodeIndex& idx) const;
  void set(const NodeIndex& idx, double v);

  double sup_norm() const;
  double sup_distance(const GridFunction& o) const;

  static GridFunction sample(const Grid& g, const std::function<double(const Vec&)>& f);

private:
  Grid grid_;
  std::vector<double> v_;
};

/// One lattice direction of a stencil frame.
struct Direction {
  std::array<int, 2> d{1, 0};
};

/// A frame is a set of dim mutually orthogonal lattice directions.
using Frame = std::vector<Direction>;

/// Narrow default: the axis frame in 1D; axis frame plus the (1,1)/(1,-1)
/// diagonal frame in 2D.  `wide` adds the (2,1)-type frames in 2D.
std::vector<Frame> default_frames(int dim, bool wide = false);
/// Throws std::invalid_argument on non-orthogonal or zero directions.
void validate_frames(int dim, const std::vector<Frame>& frames);
/// Largest per-axis index offset any frame direction reaches.
int frame_radius(const std::vector<Frame>& frames);

/// (u(x+De) - 2u(x) + u(x-De)) / |De|^2 along lattice direction e, with the
/// zero boundary extension.
double directional_second_difference(const GridFunction& u, const NodeIndex& x,
                                     const Direction& e);

/// Centered second differences on the diagonal, 4-point cross differences on
/// the mixed entries.  Used by residual diagnostics, not by the monotone
/// solver path.
SymMatrix discrete_hessian(const GridFunction& u, const NodeIndex& x);

Vec centered_gradient(const GridFunction& u, const NodeIndex& x);

/// Monotone one-sided gradient magnitude.  sign=+1 gives
/// sqrt(sum_i max(D_i^- u, -D_i^+ u, 0)^2) so that +gamma * (value) is a
/// degenerate elliptic term; sign=-1 gives the dual form for -gamma * (value).
double upwind_gradient_norm(const GridFunction& u, const NodeIndex& x, int sign);

/// max over frames of sum_i phi(s_i), phi(s) = -lambda s+ + Lambda s-, with
/// s_i the directional second differences along the frame.
double discrete_pucci_plus(const GridFunction& u, const NodeIndex& x, double lambda,
                           double Lambda, const std::vector<Frame>& frames);
/// min over frames of sum_i phi(s_i), phi(s) = -Lambda s+ + lambda s-.
double discrete_pucci_minus(const GridFunction& u, const NodeIndex& x, double lambda,
                            double Lambda, const std::vector<Frame>& frames);

}  // namespace rothe
