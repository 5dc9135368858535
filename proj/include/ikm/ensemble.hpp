#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ikm/sequence.hpp"

namespace ikm {

enum class TailModel { Dropped, Frozen };

/// Truncated phase configuration at a given time. Phases are stored
/// unwrapped; reducing mod 2pi would destroy the ordering and window
/// invariants the sender diagnostics rely on.
struct PhaseState {
  std::vector<double> phases;
  double time = 0.0;
  TailModel tail_model = TailModel::Dropped;
  double tail_phase = 0.0;  // only meaningful under Frozen

  std::size_t truncation() const { return phases.size(); }
};

/// Natural frequencies, homogeneous or per-index.
class FrequencyVector {
 public:
  static FrequencyVector homogeneous(double nu);
  static FrequencyVector per_index(std::vector<double> values);

  bool is_homogeneous() const { return homogeneous_; }

  /// nu_i, 1-based. Per-index vectors throw DimensionMismatch beyond length.
  double at(std::size_t i) const;

  /// sup norm over the first n indices.
  double inf_norm(std::size_t n) const;

  /// max - min over the first n indices (0 for homogeneous).
  double diameter(std::size_t n) const;

  /// l^p norm over the first n indices.
  double lp(double p, std::size_t n) const;

  std::size_t length() const { return values_.size(); }

 private:
  FrequencyVector() = default;
  bool homogeneous_ = true;
  double nu_ = 0.0;
  std::vector<double> values_;
};

/// Instantaneous frequency configuration for the second-order formulation.
struct FrequencyState {
  std::vector<double> omegas;
  double time = 0.0;
};

/// max - min over the truncated indices (plus the frozen tail phase, if any).
double diameter(const PhaseState& theta);

/// Componentwise (min, max).
std::pair<double, double> extremals(const PhaseState& theta);

/// Standard l^p norm, p in [1, inf]; p = inf gives max |x_i|.
double lp_norm(std::span<const double> x, double p);

/// sum_{k<=N} kappa_k * theta_k with compensated summation in index order.
double weighted_sum(const PhaseState& theta, const PositiveSequence& kappa);

/// theta_i - nu * t for every i; diameter-preserving.
PhaseState gauge_shift(const PhaseState& theta, double nu, double t);

double frequency_diameter(const FrequencyState& omega);

}  // namespace ikm
