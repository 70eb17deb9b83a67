#include "rothe/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rothe/problems.hpp"

namespace rothe {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("invalid number for " + key + ": '" + v + "'");
  }
}

long long to_int(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const long long i = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return i;
  } catch (const std::exception&) {
    throw ConfigError("invalid integer for " + key + ": '" + v + "'");
  }
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

RunConfig RunConfig::parse(const std::string& text) {
  RunConfig c;
  c.checks.clear();  // an explicit config states its own toggle list
  bool checks_seen = false;

  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("line " + std::to_string(lineno) + ": malformed section");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    const std::string full = section + "." + key;

    if (full == "problem.name") c.problem = val;
    else if (full == "problem.candidate_scale") c.candidate_scale = to_double(full, val);
    else if (full == "problem.initial") c.initial = val;
    else if (full == "grid.nodes") c.nodes = static_cast<int>(to_int(full, val));
    else if (full == "step.tolerance") c.tolerance = to_double(full, val);
    else if (full == "step.max_newton_iters") c.max_newton_iters = static_cast<int>(to_int(full, val));
    else if (full == "step.max_policy_iters") c.max_policy_iters = static_cast<int>(to_int(full, val));
    else if (full == "step.max_pseudo_time_iters") c.max_pseudo_time_iters = static_cast<int>(to_int(full, val));
    else if (full == "step.damping") c.damping = to_double(full, val);
    else if (full == "rothe.h") c.h = to_double(full, val);
    else if (full == "rothe.T") c.T = to_double(full, val);
    else if (full == "rothe.levels") c.levels = static_cast<int>(to_int(full, val));
    else if (full == "diagnostics.checks") { c.checks = split_list(val); checks_seen = true; }
    else if (full == "diagnostics.touch_trials") c.touch_trials = static_cast<int>(to_int(full, val));
    else if (full == "output.dir") c.out_dir = val;
    else if (full == "run.seed") c.seed = static_cast<unsigned long long>(to_int(full, val));
    else throw ConfigError("unknown key: " + full);
  }
  if (!checks_seen) c.checks = RunConfig{}.checks;
  return c;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string RunConfig::serialize() const {
  std::ostringstream out;
  out << "[problem]\n"
      << "name = " << problem << "\n"
      << "candidate_scale = " << format_double(candidate_scale) << "\n"
      << "initial = " << initial << "\n\n"
      << "[grid]\n"
      << "nodes = " << nodes << "\n\n"
      << "[step]\n"
      << "tolerance = " << format_double(tolerance) << "\n"
      << "max_newton_iters = " << max_newton_iters << "\n"
      << "max_policy_iters = " << max_policy_iters << "\n"
      << "max_pseudo_time_iters = " << max_pseudo_time_iters << "\n"
      << "damping = " << format_double(damping) << "\n\n"
      << "[rothe]\n"
      << "h = " << format_double(h) << "\n"
      << "T = " << format_double(T) << "\n"
      << "levels = " << levels << "\n\n"
      << "[diagnostics]\n"
      << "checks = ";
  for (size_t i = 0; i < checks.size(); ++i)
    out << (i ? "," : "") << checks[i];
  out << "\n"
      << "touch_trials = " << touch_trials << "\n\n"
      << "[output]\n"
      << "dir = " << out_dir << "\n\n"
      << "[run]\n"
      << "seed = " << seed << "\n";
  return out.str();
}

void RunConfig::validate() const {
  if (!(h > 0) || h > 1.0) throw ConfigError("rothe.h must lie in (0, 1]");
  if (!(T > 0)) throw ConfigError("rothe.T must be > 0");
  if (nodes < 1) throw ConfigError("grid.nodes must be >= 1");
  if (levels < 1) throw ConfigError("rothe.levels must be >= 1");
  if (damping <= 0 || damping > 1.0) throw ConfigError("step.damping must lie in (0, 1]");
  if (tolerance < 0) throw ConfigError("step.tolerance must be >= 0");
  if (touch_trials < 1) throw ConfigError("diagnostics.touch_trials must be >= 1");
  if (initial != "zero")
    throw ConfigError("problem.initial: only the zero initial datum is supported");
  const auto cat = problem_catalog();
  bool known = false;
  for (const auto& n : cat) known = known || n == problem;
  if (!known) throw ConfigError("problem.name: unknown problem " + problem);
  static const std::vector<std::string> known_checks = {
      "first_step", "increments", "lipschitz",  "gronwall",
      "pucci_sandwich", "convolution", "touch"};
  for (const auto& ch : checks) {
    bool ok = false;
    for (const auto& k : known_checks) ok = ok || k == ch;
    if (!ok) throw ConfigError("diagnostics.checks: unknown check " + ch);
  }
}

}  // namespace rothe
