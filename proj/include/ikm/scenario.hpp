#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "ikm/dynamics.hpp"
#include "ikm/ensemble.hpp"
#include "ikm/topology.hpp"

namespace ikm {

/// Diagnostic switches; everything not switched on stays absent from the
/// records (and from the CSV columns' optional fields).
struct DiagnosticsSelection {
  bool potential = false;
  bool weighted_sum = false;
  bool cross_ratios = false;
  std::vector<std::array<std::size_t, 4>> tuples;
};

/// Fully resolved experiment description. Parsing resolves the generator
/// specs (initial condition, frequencies) into concrete vectors so a
/// Scenario is self-contained and hashable.
struct Scenario {
  std::string name;
  CouplingMatrix topology = CouplingMatrix::uniform_finite(1, 0.0);
  std::size_t truncation_n = 1;
  std::vector<double> initial_phases;
  TailModel tail_model = TailModel::Dropped;
  double tail_phase = 0.0;
  FrequencyVector frequencies = FrequencyVector::homogeneous(0.0);
  IntegratorConfig integrator;
  std::size_t sample_stride = 1;
  double equilibrium_tol = 1e-6;
  bool second_order = false;
  DiagnosticsSelection diagnostics;
  double tail_budget = 1e-4;

  std::string canonical_config;        // canonical JSON echo, hashed for reports
  std::vector<std::string> warnings;   // non-fatal validation notes

  PhaseState initial_state() const;
  /// Actual integration step (resolves the automatic step rule).
  double resolved_step() const;
};

/// Reads and fully validates a scenario config file (JSON, schema_version 1).
/// Unknown keys are rejected with ConfigError; physics-inconsistent fields
/// (step bound, truncation) raise ValidationError.
Scenario parse_scenario(const std::filesystem::path& path);

/// Same, from an already-parsed JSON text.
Scenario parse_scenario_text(const std::string& text);

}  // namespace ikm
