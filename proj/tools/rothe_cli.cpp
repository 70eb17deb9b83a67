// Command-line front end: solve / verify / convergence over a flat key=value
// config.  Exit codes: 0 ok, 1 verification failure, 2 invalid config,
// 3 non-convergence.
#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "rothe/run.hpp"
#include "rothe/step_solver.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_dir;
  long long seed = -1;
  int levels = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config_path, "Path to the run configuration")
      ->required();
  cmd->add_option("--out", o.out_dir, "Output directory (overrides config)");
  cmd->add_option("--seed", o.seed, "Random seed (overrides config)");
  cmd->add_option("--levels", o.levels, "Refinement ladder depth (overrides config)");
}

rothe::RunConfig load(const CommonOpts& o) {
  rothe::RunConfig cfg = rothe::RunConfig::load(o.config_path);
  if (!o.out_dir.empty()) cfg.out_dir = o.out_dir;
  if (o.seed >= 0) cfg.seed = static_cast<unsigned long long>(o.seed);
  if (o.levels > 0) cfg.levels = o.levels;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Backward-Euler time marching for fully nonlinear uniformly "
               "elliptic parabolic equations, with estimate diagnostics"};
  app.require_subcommand(1);

  CommonOpts solve_o, verify_o, conv_o;
  CLI::App* solve = app.add_subcommand("solve", "March the implicit scheme and emit snapshots");
  add_common(solve, solve_o);
  CLI::App* verify = app.add_subcommand("verify", "Run the estimate diagnostics suite");
  add_common(verify, verify_o);
  CLI::App* conv = app.add_subcommand("convergence", "Step-refinement Cauchy/order study");
  add_common(conv, conv_o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return rothe::run_solve(load(solve_o));
    if (verify->parsed()) return rothe::run_verify(load(verify_o));
    return rothe::run_convergence(load(conv_o));
  } catch (const rothe::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const rothe::NonConvergenceError& e) {
    std::fprintf(stderr, "non-convergence at step %d: %s\n", e.step_index, e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
