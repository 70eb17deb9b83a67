#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "rothe/sym_matrix.hpp"
#include "rothe/vec.hpp"

namespace rothe {

/// Pucci extremal operators:
///   pucci_plus(M)  = -lambda Tr(M+) + Lambda Tr(M-)
///   pucci_minus(M) = -Lambda Tr(M+) + lambda Tr(M-)
/// computed from the eigendecomposition.  Requires 0 < lambda <= Lambda.
double pucci_plus(const SymMatrix& m, double lambda, double Lambda);
double pucci_minus(const SymMatrix& m, double lambda, double Lambda);

using SpaceTimeFn = std::function<double(const Vec&, double)>;

/// F(M,p,r,x,t) = -sum_i a_i M_ii + b.p + c r + forcing(x,t), with diagonal
/// second-order coefficients so the centered discretization is monotone.
struct LinearForm {
  std::array<double, 3> a{};
  std::array<double, 3> b{};
  double c = 0;
  SpaceTimeFn forcing;  // may be null (treated as zero)
};

/// F(M,p,r,x,t) = P^{+/-}(M) + (for plus) gamma |p|, resp. - gamma |p|,
/// + forcing(x,t).
struct PucciForm {
  bool is_plus = true;
  SpaceTimeFn forcing;
};

struct BellmanControl {
  SymMatrix A = SymMatrix(1);  // eigenvalues must lie in [lambda, Lambda]
  Vec b;
  double c = 0;  // must be >= 0
  SpaceTimeFn f;
};

/// F = sup (or inf) over controls of  -Tr(A_k M) + b_k.p + c_k r + f_k(x,t).
struct BellmanForm {
  std::vector<BellmanControl> controls;
  bool is_sup = true;
};

/// Structural description the monotone discretization and the fast solver
/// paths understand.  Operators registered without a form can still be
/// evaluated pointwise and discretized with the centered scheme.
using MonotoneForm = std::variant<std::monostate, LinearForm, PucciForm, BellmanForm>;

/// A fully nonlinear uniformly elliptic operator together with its structure
/// constants: the ellipticity pair (lambda, Lambda), the gradient Lipschitz
/// constant gamma and the zeroth-order modulus omega_R, plus the time modulus
/// sigma2 used by the increment diagnostics.
struct EllipticOperator {
  int dim = 1;
  std::function<double(const SymMatrix&, const Vec&, double, const Vec&, double)> evaluate;
  double lambda = 1.0;
  double Lambda = 1.0;
  double gamma = 0.0;
  std::function<double(double, double)> omega_R;  // (R, s) -> modulus, null => 0
  std::function<double(double)> sigma2;           // null => 0
  bool time_independent = true;
  MonotoneForm form;

  double eval(const SymMatrix& m, const Vec& p, double r, const Vec& x, double t) const;
  double omega(double R, double s) const;
  double sigma2_of(double h) const;
};

EllipticOperator make_linear_operator(int dim, std::array<double, 3> a,
                                      std::array<double, 3> b, double c,
                                      SpaceTimeFn forcing);
EllipticOperator make_pucci_operator(int dim, bool is_plus, double lambda,
                                     double Lambda, double gamma, SpaceTimeFn forcing);
/// Throws std::invalid_argument if a control violates the eigenvalue band
/// [lambda, Lambda] or has c < 0.
EllipticOperator make_bellman_operator(int dim, double lambda, double Lambda,
                                       std::vector<BellmanControl> controls,
                                       bool is_sup = true);

}  // namespace rothe
