#pragma once

#include <cstddef>
#include <vector>

namespace ikm {

/// Strictly positive summable sequence {a_i}, 1-based, lazily represented.
/// Every family carries a closed-form (or certified) total sum and tail sum,
/// which is what makes infinite couplings truncatable with a certificate.
class PositiveSequence {
 public:
  enum class Family { Geometric, PowerLaw, Explicit };

  /// a_i = scale * ratio^(i-1), ratio in (0,1), scale > 0.
  static PositiveSequence geometric(double ratio, double scale);

  /// a_i = scale * i^(-exponent), exponent > 1, scale > 0.
  static PositiveSequence power_law(double exponent, double scale);

  /// Finite list of positive values, zero beyond its length.
  static PositiveSequence explicit_values(std::vector<double> values);

  Family family() const { return family_; }

  /// a_i for 1-based i (0 beyond the support of an Explicit family).
  double term(std::size_t i) const;

  /// Total sum, finite by construction.
  double sum() const;

  /// Tail sum over i > n; nonincreasing in n.
  double tail(std::size_t n) const;

  /// sup_i a_i.
  double max_term() const;

  /// Sum of a_i^p for p >= 1.
  double p_sum(double p) const;

  /// Same sequence with every term multiplied by factor > 0.
  PositiveSequence scaled(double factor) const;

  /// Number of stored values for Explicit, 0 for infinite families.
  std::size_t support_size() const { return values_.size(); }

 private:
  PositiveSequence() = default;

  Family family_ = Family::Explicit;
  double ratio_ = 0.0;     // Geometric
  double exponent_ = 0.0;  // PowerLaw
  double scale_ = 0.0;
  std::vector<double> values_;  // Explicit
};

}  // namespace ikm
