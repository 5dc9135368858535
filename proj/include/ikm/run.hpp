#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "ikm/check.hpp"
#include "ikm/dynamics.hpp"
#include "ikm/scenario.hpp"

namespace ikm {

struct RunReport {
  std::string scenario_name;
  std::vector<CheckResult> checks;
  std::map<std::string, double> measurements;
  double tail_certificate = 0.0;
  bool equilibrium_reached = false;
  double wall_seconds = 0.0;
  std::string config_hash;
  std::filesystem::path csv_path;
  std::filesystem::path json_path;
};

/// FNV-1a 64-bit over the canonical config text, as a hex string.
std::string config_hash(const std::string& canonical_config);

/// Serializes the time series; one row per record, %.17g, optional columns
/// left empty when untracked.
void write_csv(const Trajectory& trajectory, const std::filesystem::path& path);

/// Integrates the scenario, writes <name>.csv and <name>.json under out_dir,
/// and executes the checks the scenario's diagnostics selection implies.
RunReport run(const Scenario& scenario, const std::filesystem::path& out_dir);

/// Default output root: IKL_OUT_DIR if set, else ./out.
std::filesystem::path default_out_dir();

}  // namespace ikm
