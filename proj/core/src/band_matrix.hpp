#pragma once

#include <vector>

namespace rothe {

/// Banded square matrix with symmetric bandwidth, LU factorization without
/// pivoting (the discrete step systems are strictly diagonally dominant once
/// the 1/h term is on the diagonal) and damped Gauss-Seidel sweeps.
class BandMatrix {
public:
  BandMatrix(int n, int bandwidth);

  int n() const { return n_; }
  int bandwidth() const { return bw_; }

  double get(int i, int j) const;
  void add(int i, int j, double v);
  void set(int i, int j, double v);
  void clear();

  /// In-place LU; throws std::runtime_error on a (near-)singular pivot.
  void lu_factor();
  /// Solve with the factored matrix; rhs is overwritten by the solution.
  void lu_solve(std::vector<double>& rhs) const;

  /// Gauss-Seidel on the unfactored matrix until the update sup-norm drops
  /// below tol; returns the number of sweeps used.
  int gauss_seidel(const std::vector<double>& rhs, std::vector<double>& x,
                   double tol, int max_sweeps) const;

private:
  int idx(int i, int j) const { return i * (2 * bw_ + 1) + (j - i + bw_); }
  bool in_band(int i, int j) const;

  int n_, bw_;
  std::vector<double> a_;
};

}  // namespace rothe
