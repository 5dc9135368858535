#include "ikm/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ikm/compensated.hpp"

namespace ikm {

namespace {
// Partial-sum stagnation threshold and hard cap for families without a
// closed form in p (see power-law tails below).
constexpr double kRelFloor = 0x1.0p-40;
constexpr std::size_t kTermCap = 1'000'000;

// Euler-Maclaurin estimate of sum_{i>n} i^(-s), accurate to far below
// kRelFloor for the n used here.
double power_tail(double s, std::size_t n) {
  const double x = static_cast<double>(n);
  const double head = std::pow(x, 1.0 - s) / (s - 1.0);
  const double corr1 = -0.5 * std::pow(x, -s);
  const double corr2 = s * std::pow(x, -s - 1.0) / 12.0;
  return head + corr1 + corr2;
}
}  // namespace

PositiveSequence PositiveSequence::geometric(double ratio, double scale) {
  if (!(ratio > 0.0 && ratio < 1.0)) throw std::invalid_argument("geometric ratio must be in (0,1)");
  if (!(scale > 0.0)) throw std::invalid_argument("geometric scale must be positive");
  PositiveSequence s;
  s.family_ = Family::Geometric;
  s.ratio_ = ratio;
  s.scale_ = scale;
  return s;
}

PositiveSequence PositiveSequence::power_law(double exponent, double scale) {
  if (!(exponent > 1.0)) throw std::invalid_argument("power-law exponent must exceed 1");
  if (!(scale > 0.0)) throw std::invalid_argument("power-law scale must be positive");
  PositiveSequence s;
  s.family_ = Family::PowerLaw;
  s.exponent_ = exponent;
  s.scale_ = scale;
  return s;
}

PositiveSequence PositiveSequence::explicit_values(std::vector<double> values) {
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("explicit sequence values must be positive and finite");
    }
  }
  PositiveSequence s;
  s.family_ = Family::Explicit;
  s.values_ = std::move(values);
  return s;
}

double PositiveSequence::term(std::size_t i) const {
  if (i == 0) throw std::invalid_argument("sequence indices are 1-based");
  switch (family_) {
    case Family::Geometric:
      return scale_ * std::pow(ratio_, static_cast<double>(i - 1));
    case Family::PowerLaw:
      return scale_ * std::pow(static_cast<double>(i), -exponent_);
    case Family::Explicit:
      return i <= values_.size() ? values_[i - 1] : 0.0;
  }
  return 0.0;
}

double PositiveSequence::sum() const {
  switch (family_) {
    case Family::Geometric:
      return scale_ / (1.0 - ratio_);
    case Family::PowerLaw: {
      constexpr std::size_t n0 = 10'000;
      CompensatedSum acc;
      for (std::size_t i = 1; i <= n0; ++i) acc.add(term(i));
      return acc.value() + scale_ * power_tail(exponent_, n0);
    }
    case Family::Explicit: {
      CompensatedSum acc;
      for (double v : values_) acc.add(v);
      return acc.value();
    }
  }
  return 0.0;
}

double PositiveSequence::tail(std::size_t n) const {
  switch (family_) {
    case Family::Geometric:
      return sum() * std::pow(ratio_, static_cast<double>(n));
    case Family::PowerLaw: {
      if (n >= 100) return scale_ * power_tail(exponent_, n);
      CompensatedSum acc;
      for (std::size_t i = n + 1; i <= 100; ++i) acc.add(term(i));
      return acc.value() + scale_ * power_tail(exponent_, 100);
    }
    case Family::Explicit: {
      CompensatedSum acc;
      for (std::size_t i = n; i < values_.size(); ++i) acc.add(values_[i]);
      return acc.value();
    }
  }
  return 0.0;
}

double PositiveSequence::max_term() const {
  switch (family_) {
    case Family::Geometric:
    case Family::PowerLaw:
      return term(1);  // strictly decreasing
    case Family::Explicit:
      return values_.empty() ? 0.0 : *std::max_element(values_.begin(), values_.end());
  }
  return 0.0;
}

double PositiveSequence::p_sum(double p) const {
  if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
  switch (family_) {
    case Family::Geometric: {
      const double rp = std::pow(ratio_, p);
      return std::pow(scale_, p) / (1.0 - rp);
    }
    case Family::PowerLaw: {
      // exponent*p > 1 always, so the partial sum stagnates or the
      // Euler-Maclaurin tail finishes it.
      CompensatedSum acc;
      std::size_t i = 1;
      for (; i <= kTermCap; ++i) {
        const double t = std::pow(term(i), p);
        acc.add(t);
        if (t < kRelFloor * acc.value() && i >= 100) break;
      }
      const double tail = std::pow(scale_, p) * power_tail(exponent_ * p, i);
      return acc.value() + tail;
    }
    case Family::Explicit: {
      CompensatedSum acc;
      for (double v : values_) acc.add(std::pow(v, p));
      return acc.value();
    }
  }
  return 0.0;
}

PositiveSequence PositiveSequence::scaled(double factor) const {
  if (!(factor > 0.0)) throw std::invalid_argument("scale factor must be positive");
  PositiveSequence s = *this;
  switch (family_) {
    case Family::Geometric:
    case Family::PowerLaw:
      s.scale_ *= factor;
      break;
    case Family::Explicit:
      for (double& v : s.values_) v *= factor;
      break;
  }
  return s;
}

}  // namespace ikm
