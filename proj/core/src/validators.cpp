#include "rothe/validators.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace rothe {

namespace {

SymMatrix random_sym(int dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  SymMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) m.set(i, j, u(rng));
  return m;
}

// N = Q^T D Q with D uniform in (0, 2].
SymMatrix random_positive_definite(int dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ud(1e-3, 2.0);
  std::uniform_real_distribution<double> ua(0.0, 2.0 * M_PI);
  double d[3];
  for (int i = 0; i < dim; ++i) d[i] = ud(rng);
  double q[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  // compose random Givens rotations
  for (int p = 0; p < dim - 1; ++p)
    for (int r = p + 1; r < dim; ++r) {
      const double a = ua(rng), c = std::cos(a), s = std::sin(a);
      for (int k = 0; k < dim; ++k) {
        const double qp = q[p][k], qr = q[r][k];
        q[p][k] = c * qp - s * qr;
        q[r][k] = s * qp + c * qr;
      }
    }
  SymMatrix n(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      double v = 0;
      for (int k = 0; k < dim; ++k) v += q[k][i] * d[k] * q[k][j];
      n.set(i, j, v);
    }
  return n;
}

Vec random_vec(int dim, std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  Vec v;
  v.dim = dim;
  for (int i = 0; i < dim; ++i) v[i] = u(rng);
  return v;
}

std::string describe(const SymMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) os << m(i, j) << (j + 1 < m.dim() ? " " : "");
    os << (i + 1 < m.dim() ? "; " : "]");
  }
  return os.str();
}

}  // namespace

StructureReport check_uniform_ellipticity(const EllipticOperator& op,
                                          int sample_count, std::uint64_t seed) {
  StructureReport rep;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ur(-2.0, 2.0);
  std::uniform_real_distribution<double> ut(0.0, 1.0);
  bool first = true;
  for (int k = 0; k < sample_count; ++k) {
    const SymMatrix m = random_sym(op.dim, rng);
    const SymMatrix n = random_positive_definite(op.dim, rng);
    const Vec p = random_vec(op.dim, rng, -2.0, 2.0);
    const double r = ur(rng);
    const Vec x = random_vec(op.dim, rng, 0.0, 1.0);
    const double t = ut(rng);
    const double diff = op.eval(m + n, p, r, x, t) - op.eval(m, p, r, x, t);
    const double norm = n.nuclear_norm();
    const double lower = diff - (-op.Lambda * norm);
    const double upper = (-op.lambda * norm) - diff;
    if (first || lower < rep.worst_lower_margin) rep.worst_lower_margin = lower;
    if (first || upper < rep.worst_upper_margin) rep.worst_upper_margin = upper;
    first = false;
    const double tol = 1e-9 * (1.0 + std::abs(diff));
    if ((lower < -tol || upper < -tol) && rep.pass) {
      rep.pass = false;
      std::ostringstream os;
      os << "sample " << k << ": M=" << describe(m) << " N=" << describe(n)
         << " diff=" << diff << " |N|=" << norm;
      rep.witness = os.str();
    }
  }
  rep.samples = sample_count;
  return rep;
}

StructureReport check_structure_condition(const EllipticOperator& op, double R,
                                          int sample_count, std::uint64_t seed) {
  if (!(R > 0)) throw std::invalid_argument("check_structure_condition: R must be > 0");
  StructureReport rep;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ur(-R, R);
  std::uniform_real_distribution<double> ut(0.0, 1.0);
  bool first = true;
  for (int k = 0; k < sample_count; ++k) {
    const SymMatrix m = random_sym(op.dim, rng);
    const SymMatrix n = random_sym(op.dim, rng);
    const Vec p = random_vec(op.dim, rng, -2.0, 2.0);
    const Vec q = random_vec(op.dim, rng, -2.0, 2.0);
    const double r = ur(rng), s = ur(rng);
    const Vec x = random_vec(op.dim, rng, 0.0, 1.0);
    const double t = ut(rng);
    const double diff = op.eval(m, p, r, x, t) - op.eval(n, q, s, x, t);
    const double gp = op.gamma * (p - q).norm();
    const double lo = pucci_minus(m - n, op.lambda, op.Lambda) - gp -
                      op.omega(R, std::max(s - r, 0.0));
    const double hi = pucci_plus(m - n, op.lambda, op.Lambda) + gp +
                      op.omega(R, std::max(r - s, 0.0));
    const double lower = diff - lo;
    const double upper = hi - diff;
    if (first || lower < rep.worst_lower_margin) rep.worst_lower_margin = lower;
    if (first || upper < rep.worst_upper_margin) rep.worst_upper_margin = upper;
    first = false;
    const double tol = 1e-9 * (1.0 + std::abs(diff));
    if ((lower < -tol || upper < -tol) && rep.pass) {
      rep.pass = false;
      std::ostringstream os;
      os << "sample " << k << ": M=" << describe(m) << " N=" << describe(n)
         << " diff=" << diff;
      rep.witness = os.str();
    }
  }
  rep.samples = sample_count;
  return rep;
}

StructureReport check_boundedness(const EllipticOperator& op, int sample_count,
                                  std::uint64_t seed) {
  StructureReport rep;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ur(-2.0, 2.0);
  std::uniform_real_distribution<double> ut(0.0, 1.0);
  for (int k = 0; k < sample_count; ++k) {
    const SymMatrix m = random_sym(op.dim, rng);
    const Vec p = random_vec(op.dim, rng, -2.0, 2.0);
    const double r = ur(rng);
    const Vec x = random_vec(op.dim, rng, 0.0, 1.0);
    const double t = ut(rng);
    const double v = op.eval(m, p, r, x, t);
    if (!std::isfinite(v) && rep.pass) {
      rep.pass = false;
      std::ostringstream os;
      os << "sample " << k << ": F not finite at M=" << describe(m);
      rep.witness = os.str();
    }
  }
  rep.samples = sample_count;
  return rep;
}

}  // namespace rothe
