#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace ikm {

/// One sampled cross-ratio value: the 1-based index 4-tuple and its complex
/// value; valid is false once the degeneracy guard tripped at this sample.
struct CrossRatioSample {
  std::array<std::size_t, 4> indices{};
  std::complex<double> value{};
  bool valid = true;
};

/// Per-timestep measurements. Optional fields are absent when the scenario
/// does not track them (or they are undefined for the topology family).
struct DiagnosticsRecord {
  double time = 0.0;
  double d_theta = 0.0;
  std::optional<double> d_omega;
  double r = 0.0;
  std::optional<double> phi;  // absent below the r floor
  std::optional<double> potential_p;
  std::optional<double> weighted_s;
  double rhs_l2 = 0.0;
  double rhs_linf = 0.0;
  double tail_certificate = 0.0;
  std::vector<CrossRatioSample> cross_ratios;
};

}  // namespace ikm
