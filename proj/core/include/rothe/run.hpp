#pragma once

#include <cstdint>
#include <string>

#include "rothe/config.hpp"

namespace rothe {

/// 64-bit FNV-1a of a byte string; used for the manifest's file inventory.
std::uint64_t fnv1a(const std::string& bytes);

/// Command entry points shared by the CLI and the tests.  Each validates the
/// config (throwing ConfigError for the caller to map to exit code 2), runs,
/// writes its CSV outputs plus an atomically-renamed manifest.json into
/// cfg.out_dir, and returns the process exit code:
///   0 success / all checks pass, 1 verification failure, 3 non-convergence.
int run_solve(const RunConfig& cfg);
int run_verify(const RunConfig& cfg);
int run_convergence(const RunConfig& cfg);

}  // namespace rothe
