#include "band_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rothe {

BandMatrix::BandMatrix(int n, int bandwidth)
    : n_(n), bw_(bandwidth), a_(static_cast<size_t>(n) * (2 * bandwidth + 1), 0.0) {}

bool BandMatrix::in_band(int i, int j) const {
  return i >= 0 && i < n_ && j >= 0 && j < n_ && std::abs(i - j) <= bw_;
}

double BandMatrix::get(int i, int j) const { return in_band(i, j) ? a_[idx(i, j)] : 0.0; }

void BandMatrix::add(int i, int j, double v) {
  if (!in_band(i, j)) throw std::out_of_range("BandMatrix::add outside band");
  a_[idx(i, j)] += v;
}

void BandMatrix::set(int i, int j, double v) {
  if (!in_band(i, j)) throw std::out_of_range("BandMatrix::set outside band");
  a_[idx(i, j)] = v;
}

void BandMatrix::clear() { std::fill(a_.begin(), a_.end(), 0.0); }

void BandMatrix::lu_factor() {
  for (int k = 0; k < n_; ++k) {
    const double pivot = a_[idx(k, k)];
    if (std::abs(pivot) < 1e-300) throw std::runtime_error("BandMatrix: singular pivot");
    const int iend = std::min(n_ - 1, k + bw_);
    for (int i = k + 1; i <= iend; ++i) {
      const double l = a_[idx(i, k)] / pivot;
      a_[idx(i, k)] = l;
      if (l == 0.0) continue;
      const int jend = std::min(n_ - 1, k + bw_);
      for (int j = k + 1; j <= jend; ++j) a_[idx(i, j)] -= l * a_[idx(k, j)];
    }
  }
}

void BandMatrix::lu_solve(std::vector<double>& rhs) const {
  for (int i = 0; i < n_; ++i) {
    const int jstart = std::max(0, i - bw_);
    double s = rhs[i];
    for (int j = jstart; j < i; ++j) s -= a_[idx(i, j)] * rhs[j];
    rhs[i] = s;
  }
  for (int i = n_ - 1; i >= 0; --i) {
    const int jend = std::min(n_ - 1, i + bw_);
    double s = rhs[i];
    for (int j = i + 1; j <= jend; ++j) s -= a_[idx(i, j)] * rhs[j];
    rhs[i] = s / a_[idx(i, i)];
  }
}

int BandMatrix::gauss_seidel(const std::vector<double>& rhs, std::vector<double>& x,
                             double tol, int max_sweeps) const {
  x.assign(n_, 0.0);
  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    double delta = 0;
    for (int i = 0; i < n_; ++i) {
      const int jstart = std::max(0, i - bw_);
      const int jend = std::min(n_ - 1, i + bw_);
      double s = rhs[i];
      for (int j = jstart; j <= jend; ++j)
        if (j != i) s -= a_[idx(i, j)] * x[j];
      const double xi = s / a_[idx(i, i)];
      delta = std::max(delta, std::abs(xi - x[i]));
      x[i] = xi;
    }
    if (delta <= tol) return sweep;
  }
  return max_sweeps;
}

}  // namespace rothe
