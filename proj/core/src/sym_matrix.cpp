#include "rothe/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rothe {

namespace {
void require_dim(int dim) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("SymMatrix: dim must be 1, 2 or 3");
}
}  // namespace

SymMatrix::SymMatrix(int dim) : dim_(dim) { require_dim(dim); }

SymMatrix SymMatrix::zero(int dim) { return SymMatrix(dim); }

SymMatrix SymMatrix::identity(int dim) {
  SymMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, 1.0);
  return m;
}

SymMatrix SymMatrix::diagonal(std::initializer_list<double> d) {
  SymMatrix m(static_cast<int>(d.size()));
  int i = 0;
  for (double v : d) {
    m.set(i, i, v);
    ++i;
  }
  return m;
}

SymMatrix SymMatrix::from_rows(int dim, const double* rows) {
  require_dim(dim);
  SymMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      if (rows[i * dim + j] != rows[j * dim + i])
        throw std::invalid_argument("SymMatrix: input is not symmetric");
      m.e_[i * 3 + j] = rows[i * dim + j];
    }
  return m;
}

void SymMatrix::set(int i, int j, double v) {
  e_[i * 3 + j] = v;
  e_[j * 3 + i] = v;
}

double SymMatrix::trace() const {
  double t = 0;
  for (int i = 0; i < dim_; ++i) t += e_[i * 3 + i];
  return t;
}

void SymMatrix::eigensystem(std::array<double, 3>& vals, std::array<double, 9>& vecs) const {
  vals = {0, 0, 0};
  vecs = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  if (dim_ == 1) {
    vals[0] = e_[0];
    return;
  }
  if (dim_ == 2) {
    const double a = e_[0], b = e_[1], c = e_[4];
    const double tr = a + c;
    const double disc = std::sqrt(0.25 * (a - c) * (a - c) + b * b);
    vals[0] = 0.5 * tr - disc;
    vals[1] = 0.5 * tr + disc;
    // Eigenvector for vals[1]; the other is its 90-degree rotation.
    double vx, vy;
    if (std::abs(b) > 0) {
      vx = vals[1] - c;
      vy = b;
    } else if (a >= c) {
      vx = 1;
      vy = 0;
    } else {
      vx = 0;
      vy = 1;
    }
    const double n = std::hypot(vx, vy);
    vx /= n;
    vy /= n;
    // column 0 <-> vals[0], column 1 <-> vals[1]
    vecs = {-vy, vx, 0, vx, vy, 0, 0, 0, 1};
    // column-major storage: col k occupies vecs[3k..3k+2]
    return;
  }
  // d == 3: cyclic Jacobi rotations.
  double a[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] = e_[i * 3 + j];
  double v[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const double tol = 1e-12;
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = std::abs(a[0][1]) + std::abs(a[0][2]) + std::abs(a[1][2]);
    if (off < tol) break;
    for (int p = 0; p < 2; ++p)
      for (int q = p + 1; q < 3; ++q) {
        if (std::abs(a[p][q]) < tol * 1e-4) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < 3; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 3; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < 3; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
  }
  int order[3] = {0, 1, 2};
  std::sort(order, order + 3, [&](int i, int j) { return a[i][i] < a[j][j]; });
  for (int k = 0; k < 3; ++k) {
    vals[k] = a[order[k]][order[k]];
    for (int r = 0; r < 3; ++r) vecs[3 * k + r] = v[r][order[k]];
  }
}

std::array<double, 3> SymMatrix::eigenvalues() const {
  std::array<double, 3> vals;
  std::array<double, 9> vecs;
  eigensystem(vals, vecs);
  return vals;
}

double SymMatrix::trace_positive_part() const {
  double s = 0;
  const auto ev = eigenvalues();
  for (int i = 0; i < dim_; ++i) s += std::max(ev[i], 0.0);
  return s;
}

double SymMatrix::trace_negative_part() const {
  double s = 0;
  const auto ev = eigenvalues();
  for (int i = 0; i < dim_; ++i) s += std::max(-ev[i], 0.0);
  return s;
}

double SymMatrix::spectral_norm() const {
  double s = 0;
  const auto ev = eigenvalues();
  for (int i = 0; i < dim_; ++i) s = std::max(s, std::abs(ev[i]));
  return s;
}

double SymMatrix::nuclear_norm() const {
  double s = 0;
  const auto ev = eigenvalues();
  for (int i = 0; i < dim_; ++i) s += std::abs(ev[i]);
  return s;
}

SymMatrix SymMatrix::clipped_part(bool positive) const {
  std::array<double, 3> vals;
  std::array<double, 9> vecs;
  eigensystem(vals, vecs);
  SymMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j) {
      double s = 0;
      for (int k = 0; k < dim_; ++k) {
        const double lk = positive ? std::max(vals[k], 0.0) : std::max(-vals[k], 0.0);
        s += lk * vecs[3 * k + i] * vecs[3 * k + j];
      }
      out.set(i, j, s);
    }
  return out;
}

SymMatrix SymMatrix::positive_part() const { return clipped_part(true); }
SymMatrix SymMatrix::negative_part() const { return clipped_part(false); }

SymMatrix& SymMatrix::operator+=(const SymMatrix& o) {
  for (int i = 0; i < 9; ++i) e_[i] += o.e_[i];
  return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& o) {
  for (int i = 0; i < 9; ++i) e_[i] -= o.e_[i];
  return *this;
}

SymMatrix& SymMatrix::operator*=(double s) {
  for (int i = 0; i < 9; ++i) e_[i] *= s;
  return *this;
}

}  // namespace rothe
