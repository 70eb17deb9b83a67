#include "rothe/run.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "rothe/diagnostics.hpp"
#include "rothe/problems.hpp"
#include "rothe/touch_test.hpp"

namespace rothe {

namespace fs = std::filesystem;
using nlohmann::json;

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

std::string iso_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Collects emitted files; writes the manifest last, via tmp + rename so a
/// crash never leaves a half-written manifest next to complete outputs.
class Emitter {
public:
  explicit Emitter(const RunConfig& cfg) : cfg_(cfg), dir_(cfg.out_dir) {
    fs::create_directories(dir_);
    start_ = iso_now();
  }

  void write(const std::string& name, const std::string& content) {
    std::ofstream out(dir_ / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir_ / name).string());
    out << content;
    files_[name] = fnv1a(content);
  }

  void finish(const std::string& command, const json& outcome) {
    json m;
    m["artifact_version"] = "0.1.0";
    m["command"] = command;
    m["config"] = cfg_.serialize();
    m["started"] = start_;
    m["finished"] = iso_now();
    m["outcome"] = outcome;
    json inv = json::object();
    for (const auto& [name, sum] : files_) {
      char buf[19];
      std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(sum));
      inv[name] = buf;
    }
    m["files"] = inv;
    const fs::path tmp = dir_ / "manifest.json.tmp";
    {
      std::ofstream out(tmp, std::ios::binary);
      out << m.dump(2) << "\n";
    }
    fs::rename(tmp, dir_ / "manifest.json");
  }

private:
  const RunConfig& cfg_;
  fs::path dir_;
  std::string start_;
  std::map<std::string, std::uint64_t> files_;
};

StepConfig step_config(const RunConfig& cfg) {
  StepConfig s;
  s.tolerance = cfg.tolerance;
  s.max_newton_iters = cfg.max_newton_iters;
  s.max_policy_iters = cfg.max_policy_iters;
  s.max_pseudo_time_iters = cfg.max_pseudo_time_iters;
  s.damping = cfg.damping;
  return s;
}

std::string checks_csv(const std::vector<CheckResult>& checks) {
  std::ostringstream out;
  out << "check,measured,bound,margin,tolerance,pass,note\n";
  for (const auto& c : checks) {
    std::string note = c.note;
    for (auto& ch : note)
      if (ch == ',' || ch == '\n') ch = ';';
    out << c.name << ',' << format_double(c.measured) << ','
        << format_double(c.bound) << ',' << format_double(c.margin) << ','
        << format_double(c.tolerance) << ',' << (c.pass ? "1" : "0") << ','
        << note << "\n";
  }
  return out.str();
}

bool has_check(const RunConfig& cfg, const std::string& name) {
  for (const auto& c : cfg.checks)
    if (c == name) return true;
  return false;
}

void append(std::vector<CheckResult>& all, const DiagnosticsReport& rep) {
  all.insert(all.end(), rep.checks.begin(), rep.checks.end());
}

}  // namespace

int run_solve(const RunConfig& cfg) {
  cfg.validate();
  const TestProblem prob = manufactured_problem(cfg.problem);
  const Grid g = prob.make_grid(cfg.nodes);
  Discretization disc;
  RotheConfig rc;
  rc.h = cfg.h;
  rc.T = cfg.T;
  rc.step = step_config(cfg);

  Emitter em(cfg);
  json outcome;
  try {
    const RotheSequence seq = run_rothe(prob.op, disc, g, rc);

    std::ostringstream snap;
    snap << "time,node,x,y,value\n";
    for (int n = 0; n < static_cast<int>(seq.levels.size()); ++n) {
      const double t = std::min(n * seq.h, seq.T);
      for (int i = 0; i < seq.levels[n].size(); ++i) {
        const Vec x = g.coord(g.node(i));
        snap << format_double(t) << ',' << i << ',' << format_double(x[0]) << ','
             << format_double(g.dim() > 1 ? x[1] : 0.0) << ','
             << format_double(seq.levels[n][i]) << "\n";
      }
    }
    em.write("snapshots.csv", snap.str());

    std::ostringstream tele;
    tele << "step,method,iterations,residual,converged\n";
    for (size_t n = 0; n < seq.reports.size(); ++n) {
      const auto& r = seq.reports[n];
      tele << n + 1 << ',' << step_method_name(r.method_used) << ','
           << r.iterations << ',' << format_double(r.final_residual_norm) << ','
           << (r.converged ? "1" : "0") << "\n";
    }
    em.write("telemetry.csv", tele.str());

    if (prob.exact) {
      std::ostringstream err;
      err << "time,sup_error\n";
      for (int n = 0; n < static_cast<int>(seq.levels.size()); ++n) {
        const double t = std::min(n * seq.h, seq.T);
        const GridFunction ref = GridFunction::sample(
            g, [&](const Vec& x) { return prob.exact(x, t); });
        err << format_double(t) << ','
            << format_double(seq.levels[n].sup_distance(ref)) << "\n";
      }
      em.write("error_vs_exact.csv", err.str());
    }
    outcome["status"] = "ok";
    em.finish("solve", outcome);
    return 0;
  } catch (const NonConvergenceError& e) {
    outcome["status"] = "non_convergence";
    outcome["step_index"] = e.step_index;
    outcome["residual"] = e.report.final_residual_norm;
    outcome["message"] = e.what();
    em.finish("solve", outcome);
    return 3;
  }
}

int run_verify(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.checks.empty()) throw ConfigError("diagnostics.checks: nothing to verify");
  const TestProblem prob = manufactured_problem(cfg.problem);
  const Grid g = prob.make_grid(cfg.nodes);
  Discretization disc;

  Emitter em(cfg);
  json outcome;
  std::vector<CheckResult> all;
  try {
    // One marched ladder shared by every sequence-based check.
    std::vector<RotheSequence> ladder;
    for (int k = 0; k < cfg.levels; ++k) {
      RotheConfig rc;
      rc.h = cfg.h / std::pow(2.0, k);
      rc.T = cfg.T;
      rc.step = step_config(cfg);
      ladder.push_back(run_rothe(prob.op, disc, g, rc));
    }
    const double tol = cfg.tolerance > 0 ? cfg.tolerance : default_step_tolerance(cfg.h);

    if (has_check(cfg, "first_step")) {
      std::vector<double> ratios;
      for (const auto& seq : ladder) {
        append(all, first_step_report(seq));
        ratios.push_back(seq.levels[1].sup_norm() / seq.h);
      }
      all.push_back(ladder_stability("first_step_ratio_ladder", ratios, 1e-9));
    }
    if (has_check(cfg, "increments"))
      for (const auto& seq : ladder)
        if (seq.steps() >= 2) append(all, increment_report(seq, prob.op, tol));
    if (has_check(cfg, "lipschitz")) {
      std::vector<double> ls;
      for (const auto& seq : ladder) {
        append(all, lipschitz_report(seq));
        ls.push_back(seq.lipschitz_in_time());
      }
      all.push_back(ladder_stability("lipschitz_ladder", ls, 1e-9));
    }
    if (has_check(cfg, "gronwall")) {
      std::mt19937_64 rng(cfg.seed);
      std::uniform_real_distribution<double> u(0.0, 2.0);
      std::uniform_int_distribution<int> len(0, 50);
      double worst = 0;
      for (int rep = 0; rep < 200; ++rep) {
        const int n = len(rng);
        std::vector<double> B(n), D(n);
        for (auto& b : B) b = u(rng);
        for (auto& d : D) d = u(rng);
        const double v0 = u(rng);
        worst = std::max(worst, std::abs(gronwall_bound(v0, B, D) -
                                         gronwall_recursion(v0, B, D)));
      }
      DiagnosticsReport r;
      r.add_upper("gronwall_equals_recursion", worst, 0, 0,
                  "200 random nonnegative instances; exact equality required");
      const double flat = gronwall_bound(3.0, std::vector<double>(7, 1.0),
                                         std::vector<double>(7, 0.25));
      r.add_upper("gronwall_flat_specialization", std::abs(flat - (3.0 + 7 * 0.25)),
                  0, 0, "B == 1 collapses to v0 + n d");
      append(all, r);
    }
    if (has_check(cfg, "pucci_sandwich")) {
      const RotheSequence& seq = ladder[0];
      std::mt19937_64 rng(cfg.seed + 1);
      std::uniform_int_distribution<int> pick(1, seq.steps());
      for (int rep = 0; rep < 5; ++rep) {
        const int n = pick(rng);
        const double t = std::min(n * seq.h, seq.T);
        DiagnosticsReport r = pucci_sandwich_check(prob.op, seq.levels[n - 1],
                                                   seq.levels[n], seq.h, t, tol);
        for (auto& c : r.checks) c.name += "_step" + std::to_string(n);
        append(all, r);
      }
    }
    if (has_check(cfg, "convolution")) {
      std::mt19937_64 rng(cfg.seed + 2);
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      const Grid cg = prob.op.dim == 1 ? Grid(0, 1, 31) : Grid(0, 1, 15, 0, 1, 15);
      double worst_margin = std::numeric_limits<double>::infinity();
      bool ok = true;
      for (int rep = 0; rep < 20; ++rep) {
        GridFunction f(cg);
        for (int i = 0; i < f.size(); ++i) f[i] = u(rng);
        const double eps = 0.5 + 0.5 * std::abs(u(rng));
        const GridFunction fe = sup_convolution(f, eps);
        DiagnosticsReport r = semiconvexity_check(f, fe, eps);
        DiagnosticsReport m = convolution_monotonicity_check(f, eps, eps / 2);
        for (const auto& c : r.checks) {
          ok = ok && c.pass;
          worst_margin = std::min(worst_margin, c.margin);
        }
        for (const auto& c : m.checks) {
          ok = ok && c.pass;
          worst_margin = std::min(worst_margin, c.margin);
        }
      }
      CheckResult c;
      c.name = "convolution_random_suite";
      c.measured = worst_margin;
      c.bound = 0;
      c.margin = worst_margin;
      c.tolerance = 1e-9;
      c.pass = ok;
      c.note = "semiconvexity, dominance, eps-monotonicity, duality on random fields";
      all.push_back(c);
    }
    if (has_check(cfg, "touch")) {
      TouchTestConfig tc;
      tc.trials = cfg.touch_trials;
      tc.seed = cfg.seed;
      tc.candidate_scale = cfg.candidate_scale;
      const TouchTestReport tr = viscosity_touch_test(prob.op, disc, ladder.back(), tc);
      CheckResult c;
      c.name = "viscosity_touch_test";
      c.measured = tr.failed;
      c.bound = 0;
      c.margin = -static_cast<double>(tr.failed);
      c.tolerance = 0;
      c.pass = tr.pass();
      c.note = std::to_string(tr.qualified) + " qualifying trials, " +
               std::to_string(tr.discarded) + " discarded, " +
               std::to_string(tr.interior_touches) + " interior touches";
      all.push_back(c);
    }
  } catch (const NonConvergenceError& e) {
    em.write("checks.csv", checks_csv(all));
    outcome["status"] = "non_convergence";
    outcome["step_index"] = e.step_index;
    outcome["message"] = e.what();
    em.finish("verify", outcome);
    return 3;
  }

  em.write("checks.csv", checks_csv(all));
  std::ostringstream sum;
  int failed = 0;
  for (const auto& c : all) {
    if (!c.pass) ++failed;
    sum << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
        << "  measured=" << format_double(c.measured)
        << " margin=" << format_double(c.margin) << "\n";
  }
  sum << (failed ? "FAILED " + std::to_string(failed) + " of " : "passed all ")
      << all.size() << " checks\n";
  em.write("summary.txt", sum.str());
  outcome["status"] = failed ? "checks_failed" : "ok";
  outcome["checks_total"] = all.size();
  outcome["checks_failed"] = failed;
  em.finish("verify", outcome);
  return failed ? 1 : 0;
}

int run_convergence(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.levels < 3)
    throw ConfigError("rothe.levels: convergence studies need >= 3 ladder levels");
  const TestProblem prob = manufactured_problem(cfg.problem);
  const Grid g = prob.make_grid(cfg.nodes);
  Discretization disc;
  RotheConfig rc;
  rc.h = cfg.h;
  rc.T = cfg.T;
  rc.step = step_config(cfg);

  Emitter em(cfg);
  json outcome;
  try {
    const auto cauchy = refinement_ladder(prob.op, disc, g, rc, cfg.levels, nullptr);
    std::ostringstream ct;
    ct << "level,h,cauchy_diff,observed_order\n";
    for (size_t k = 0; k < cauchy.size(); ++k)
      ct << k << ',' << format_double(cauchy[k].h) << ','
         << format_double(cauchy[k].error) << ','
         << format_double(cauchy[k].observed_order) << "\n";
    em.write("cauchy.csv", ct.str());

    std::ostringstream plot;
    for (const auto& row : cauchy)
      plot << format_double(row.h) << ' ' << format_double(row.error) << "\n";
    em.write("cauchy_plot.dat", plot.str());

    if (prob.exact) {
      const auto order = refinement_ladder(prob.op, disc, g, rc, cfg.levels, prob.exact);
      std::ostringstream ot;
      ot << "level,h,sup_error,observed_order\n";
      for (size_t k = 0; k < order.size(); ++k)
        ot << k << ',' << format_double(order[k].h) << ','
           << format_double(order[k].error) << ','
           << format_double(order[k].observed_order) << "\n";
      em.write("order.csv", ot.str());
      std::ostringstream plot2;
      for (const auto& row : order)
        plot2 << format_double(row.h) << ' ' << format_double(row.error) << "\n";
      em.write("order_plot.dat", plot2.str());
    }
    outcome["status"] = "ok";
    em.finish("convergence", outcome);
    return 0;
  } catch (const NonConvergenceError& e) {
    outcome["status"] = "non_convergence";
    outcome["step_index"] = e.step_index;
    outcome["message"] = e.what();
    em.finish("convergence", outcome);
    return 3;
  }
}

}  // namespace rothe
