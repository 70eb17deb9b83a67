#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rothe {

/// Raised on malformed or out-of-range configuration; the CLI maps it to
/// exit code 2.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Flat INI-style run configuration: named sections of key = value pairs,
/// one level deep, '#' comments.  Serialization is canonical (fixed section
/// and key order, 17-significant-digit floats) so parse -> serialize ->
/// parse is the identity.
struct RunConfig {
  // [problem]
  std::string problem = "P1_linear_1d";
  double candidate_scale = 1.0;  // touch-test negative control when != 1
  std::string initial = "zero";  // the only supported initial datum

  // [grid]
  int nodes = 63;

  // [step]
  double tolerance = 0;  // 0 => solver default
  int max_newton_iters = 60;
  int max_policy_iters = 100;
  int max_pseudo_time_iters = 2000000;
  double damping = 1.0;

  // [rothe]
  double h = 0.1;
  double T = 1.0;
  int levels = 4;  // refinement ladder depth (h halved per level)

  // [diagnostics]
  std::vector<std::string> checks = {"first_step",     "increments", "lipschitz",
                                     "gronwall",       "pucci_sandwich",
                                     "convolution",    "touch"};
  int touch_trials = 200;

  // [output]
  std::string out_dir = "out";

  // [run]
  unsigned long long seed = 12345;

  static RunConfig parse(const std::string& text);
  static RunConfig load(const std::string& path);
  std::string serialize() const;

  /// Range checks shared by every command (h in (0,1], T > 0, ...);
  /// throws ConfigError.
  void validate() const;
};

/// 17-significant-digit decimal rendering used for every float the artifact
/// writes, so outputs are bit-reproducible across runs.
std::string format_double(double v);

}  // namespace rothe
