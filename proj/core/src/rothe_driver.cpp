#include "rothe/rothe_driver.hpp"

#include <cmath>
#include <stdexcept>

namespace rothe {

GridFunction RotheSequence::interpolate(double t) const {
  if (levels.empty()) throw std::logic_error("RotheSequence::interpolate: empty");
  const double tc = std::min(std::max(t, 0.0), T);
  // Uniform levels except possibly a shortened last step.
  const int N = steps();
  int n = static_cast<int>(std::floor(tc / h));
  if (n >= N) return levels.back();
  const double t0 = n * h;
  const double t1 = std::min((n + 1) * h, T);
  const double theta = (tc - t0) / (t1 - t0);
  GridFunction u = levels[n];
  for (int i = 0; i < u.size(); ++i)
    u[i] = (1.0 - theta) * levels[n][i] + theta * levels[n + 1][i];
  return u;
}

double RotheSequence::lipschitz_in_time() const {
  double lip = 0;
  for (int n = 1; n < static_cast<int>(levels.size()); ++n) {
    const double tn = std::min(n * h, T), tp = (n - 1) * h;
    lip = std::max(lip, levels[n].sup_distance(levels[n - 1]) / (tn - tp));
  }
  return lip;
}

std::vector<double> RotheSequence::increment_norms() const {
  std::vector<double> w;
  for (int n = 1; n < static_cast<int>(levels.size()); ++n)
    w.push_back(levels[n].sup_distance(levels[n - 1]));
  return w;
}

RotheSequence run_rothe_from(const EllipticOperator& op, const Discretization& disc,
                             const GridFunction& initial, const RotheConfig& cfg) {
  if (!(cfg.h > 0) || cfg.h > 1.0)
    throw std::invalid_argument("run_rothe: step h must lie in (0, 1]");
  if (!(cfg.T > 0)) throw std::invalid_argument("run_rothe: final time must be > 0");

  RotheSequence seq;
  seq.h = cfg.h;
  seq.T = cfg.T;
  seq.levels.push_back(initial);
  double t = 0;
  int n = 0;
  while (t < cfg.T - 1e-14 * cfg.T) {
    const double hn = std::min(cfg.h, cfg.T - t);
    const double t_next = std::min(t + cfg.h, cfg.T);
    try {
      auto [z, rep] = solve_step(op, disc, seq.levels.back(), hn, t_next, cfg.step);
      seq.levels.push_back(std::move(z));
      seq.reports.push_back(rep);
    } catch (NonConvergenceError& e) {
      e.step_index = n + 1;
      throw;
    }
    t = t_next;
    ++n;
  }
  return seq;
}

RotheSequence run_rothe(const EllipticOperator& op, const Discretization& disc,
                        const Grid& g, const RotheConfig& cfg) {
  return run_rothe_from(op, disc, GridFunction(g), cfg);
}

std::vector<RefinementLevel> refinement_ladder(
    const EllipticOperator& op, const Discretization& disc, const Grid& g,
    const RotheConfig& cfg, int levels,
    const std::function<double(const Vec&, double)>& exact) {
  if (levels < 1) throw std::invalid_argument("refinement_ladder: levels must be >= 1");
  const int runs = exact ? levels : levels + 1;
  std::vector<GridFunction> finals;
  std::vector<double> hs;
  for (int k = 0; k < runs; ++k) {
    RotheConfig c = cfg;
    c.h = cfg.h / std::pow(2.0, k);
    finals.push_back(run_rothe(op, disc, g, c).levels.back());
    hs.push_back(c.h);
  }
  std::vector<RefinementLevel> out;
  for (int k = 0; k < levels; ++k) {
    RefinementLevel row;
    row.h = hs[k];
    if (exact) {
      GridFunction ref = GridFunction::sample(
          g, [&](const Vec& x) { return exact(x, cfg.T); });
      row.error = finals[k].sup_distance(ref);
    } else {
      row.error = finals[k].sup_distance(finals[k + 1]);
    }
    if (k > 0 && row.error > 0 && out[k - 1].error > 0)
      row.observed_order = std::log2(out[k - 1].error / row.error);
    out.push_back(row);
  }
  return out;
}

}  // namespace rothe
