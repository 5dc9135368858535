#include "ikm/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ikm/compensated.hpp"
#include "ikm/errors.hpp"

namespace ikm {

FrequencyVector FrequencyVector::homogeneous(double nu) {
  if (!std::isfinite(nu)) throw std::invalid_argument("frequency must be finite");
  FrequencyVector v;
  v.homogeneous_ = true;
  v.nu_ = nu;
  return v;
}

FrequencyVector FrequencyVector::per_index(std::vector<double> values) {
  for (double x : values) {
    if (!std::isfinite(x)) throw std::invalid_argument("frequencies must be finite");
  }
  FrequencyVector v;
  v.homogeneous_ = false;
  v.values_ = std::move(values);
  return v;
}

double FrequencyVector::at(std::size_t i) const {
  if (i == 0) throw std::invalid_argument("frequency indices are 1-based");
  if (homogeneous_) return nu_;
  if (i > values_.size()) {
    throw DimensionMismatch("frequency index beyond per-index vector length");
  }
  return values_[i - 1];
}

double FrequencyVector::inf_norm(std::size_t n) const {
  if (homogeneous_) return std::abs(nu_);
  double m = 0.0;
  for (std::size_t i = 1; i <= n; ++i) m = std::max(m, std::abs(at(i)));
  return m;
}

double FrequencyVector::diameter(std::size_t n) const {
  if (homogeneous_ || n == 0) return 0.0;
  double lo = at(1), hi = at(1);
  for (std::size_t i = 2; i <= n; ++i) {
    lo = std::min(lo, at(i));
    hi = std::max(hi, at(i));
  }
  return hi - lo;
}

double FrequencyVector::lp(double p, std::size_t n) const {
  std::vector<double> v(n);
  for (std::size_t i = 1; i <= n; ++i) v[i - 1] = at(i);
  return lp_norm(v, p);
}

double diameter(const PhaseState& theta) {
  auto [lo, hi] = extremals(theta);
  return hi - lo;
}

std::pair<double, double> extremals(const PhaseState& theta) {
  if (theta.phases.empty()) throw std::invalid_argument("empty phase state");
  double lo = theta.phases[0], hi = theta.phases[0];
  for (double x : theta.phases) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (theta.tail_model == TailModel::Frozen) {
    lo = std::min(lo, theta.tail_phase);
    hi = std::max(hi, theta.tail_phase);
  }
  return {lo, hi};
}

double lp_norm(std::span<const double> x, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
  }
  if (p == 1.0) {
    CompensatedSum acc;
    for (double v : x) acc.add(std::abs(v));
    return acc.value();
  }
  if (p == 2.0) {
    CompensatedSum acc;
    for (double v : x) acc.add(v * v);
    return std::sqrt(acc.value());
  }
  CompensatedSum acc;
  for (double v : x) acc.add(std::pow(std::abs(v), p));
  return std::pow(acc.value(), 1.0 / p);
}

double weighted_sum(const PhaseState& theta, const PositiveSequence& kappa) {
  CompensatedSum acc;
  for (std::size_t i = 1; i <= theta.phases.size(); ++i) {
    acc.add(kappa.term(i) * theta.phases[i - 1]);
  }
  return acc.value();
}

PhaseState gauge_shift(const PhaseState& theta, double nu, double t) {
  PhaseState out = theta;
  const double shift = nu * t;
  for (double& x : out.phases) x -= shift;
  if (out.tail_model == TailModel::Frozen) out.tail_phase -= shift;
  return out;
}

double frequency_diameter(const FrequencyState& omega) {
  if (omega.omegas.empty()) throw std::invalid_argument("empty frequency state");
  auto [lo, hi] = std::minmax_element(omega.omegas.begin(), omega.omegas.end());
  return *hi - *lo;
}

}  // namespace ikm
