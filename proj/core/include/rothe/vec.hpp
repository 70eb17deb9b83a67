#pragma once

#include <array>
#include <cmath>

namespace rothe {

/// Small spatial vector for points and gradients, dim in {1,2,3}.
struct Vec {
  int dim = 1;
  std::array<double, 3> c{};

  Vec() = default;
  explicit Vec(double x) : dim(1), c{x, 0, 0} {}
  Vec(double x, double y) : dim(2), c{x, y, 0} {}
  Vec(double x, double y, double z) : dim(3), c{x, y, z} {}

  double& operator[](int i) { return c[i]; }
  double operator[](int i) const { return c[i]; }

  double norm() const {
    double s = 0;
    for (int i = 0; i < dim; ++i) s += c[i] * c[i];
    return std::sqrt(s);
  }

  friend Vec operator-(Vec a, const Vec& b) {
    for (int i = 0; i < a.dim; ++i) a.c[i] -= b.c[i];
    return a;
  }
};

}  // namespace rothe
