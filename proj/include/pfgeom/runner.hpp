#pragma once

#include <string>

#include <json.hpp>

#include "pfgeom/config.hpp"

namespace pfgeom {

struct RunResult {
  int exit_code = 0;
  nlohmann::json report;            // report written (or printable) as JSON
  std::string report_path;          // empty when not written to a file
  std::string trajectory_path;      // empty when no CSV was produced
};

/// Dispatch a validated scenario. Exit codes: 0 success, 1 configuration
/// error (thrown before this point), 2 numerical failure (reported via
/// exception by the caller-facing wrapper), 3 verification-suite failure.
/// Paths in cfg.output are resolved against out_dir when it is nonempty.
RunResult run_task(const ScenarioConfig& cfg, const std::string& out_dir = "");

/// Exit code for an error kind: ConfigError -> 1, everything else -> 2.
int exit_code_for(ErrorKind kind);

/// Machine-readable diagnostic for stderr.
nlohmann::json error_json(const Error& error);

}  // namespace pfgeom
