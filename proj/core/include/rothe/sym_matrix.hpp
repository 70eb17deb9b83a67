#pragma once

#include <array>
#include <initializer_list>

namespace rothe {

/// Symmetric d x d matrix, d in {1,2,3}.  Entries are stored densely and
/// kept exactly symmetric by construction.  Eigenvalues come from closed
/// forms for d <= 2 and a cyclic Jacobi sweep for d = 3 (tolerance 1e-12),
/// so no external linear-algebra dependency is needed.
class SymMatrix {
public:
  explicit SymMatrix(int dim);

  static SymMatrix zero(int dim);
  static SymMatrix identity(int dim);
  static SymMatrix diagonal(std::initializer_list<double> d);
  /// Builds from a full row-major array; throws std::invalid_argument if the
  /// data is not exactly symmetric.
  static SymMatrix from_rows(int dim, const double* rows);

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return e_[i * 3 + j]; }
  /// Sets (i,j) and (j,i).
  void set(int i, int j, double v);

  double trace() const;
  /// Eigenvalues sorted ascending; only the first dim() entries are valid.
  std::array<double, 3> eigenvalues() const;

  double trace_positive_part() const;  // Tr(M+) = sum of max(eig, 0)
  double trace_negative_part() const;  // Tr(M-) = sum of max(-eig, 0)
  double spectral_norm() const;        // max |eig|
  double nuclear_norm() const;         // sum |eig|

  /// M+ and M- with M = M+ - M-, both positive semidefinite.
  SymMatrix positive_part() const;
  SymMatrix negative_part() const;

  SymMatrix& operator+=(const SymMatrix& o);
  SymMatrix& operator-=(const SymMatrix& o);
  SymMatrix& operator*=(double s);

  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
  friend SymMatrix operator*(double s, SymMatrix a) { return a *= s; }
  friend SymMatrix operator-(SymMatrix a) { return a *= -1.0; }

private:
  // vals ascending, vecs column-major (column k is the eigenvector of vals[k])
  void eigensystem(std::array<double, 3>& vals, std::array<double, 9>& vecs) const;
  SymMatrix clipped_part(bool positive) const;

  int dim_;
  std::array<double, 9> e_{};  // row-major 3x3 block, unused entries zero
};

}  // namespace rothe
