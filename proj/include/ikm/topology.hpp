#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ikm/sequence.hpp"

namespace ikm {

struct PhaseState;
class FrequencyVector;

/// Witness sequence for the uniform row-ratio lower bound: kappa_ij / row_i > term(j).
struct TildeKappa {
  PositiveSequence base;
  double factor = 1.0;

  double term(std::size_t j) const { return factor * base.term(j); }
  double l1() const { return factor * base.sum(); }
};

/// Result of norm_minus_inf_one: the infimum of row sums, with a flag for
/// families whose row sums decay to zero only in the i -> infinity limit.
struct InfRowSum {
  double value = 0.0;
  bool fails_in_limit = false;
};

/// Lazy infinite nonnegative coupling matrix. Entries, row sums, sup/inf/p
/// norms and truncation tails all come from per-family closed forms; the
/// matrix is never materialized.
class CouplingMatrix {
 public:
  enum class Family { ProductSummable, GeometricCross, Sender, FiniteEmbedded, UniformFinite };

  /// kappa_ij = a_i * a_j.
  static CouplingMatrix product_summable(PositiveSequence a);

  /// kappa_ij = base^-(i+j), base > 1.
  static CouplingMatrix geometric_cross(double base);

  /// kappa_ij = kappa_j; normalized=true rescales so the weights sum to 1.
  static CouplingMatrix sender(PositiveSequence kappa, bool normalized);

  /// kappa_ij = entries[i-1][j-1] inside the n x n block, 0 outside.
  static CouplingMatrix finite_embedded(std::vector<std::vector<double>> entries);

  /// kappa_ij = strength / n on [n] x [n], 0 outside.
  static CouplingMatrix uniform_finite(std::size_t n, double strength);

  Family family() const { return family_; }
  bool symmetric() const { return symmetric_; }
  bool is_sender() const { return family_ == Family::Sender; }

  /// Symmetric and in the summable class (finite norm_p_one(1)); the
  /// families for which the pair-potential diagnostics are defined.
  bool symmetric_summable() const;

  double entry(std::size_t i, std::size_t j) const;
  double row_sum(std::size_t i) const;

  /// sup_i row_sum(i).
  double norm_inf_one() const;

  /// inf_i row_sum(i). Finite-block families report the infimum over the
  /// block rows (the natural restriction); strictly decaying infinite
  /// families report 0 with fails_in_limit set.
  InfRowSum norm_minus_inf_one() const;

  /// (sum_i row_sum(i)^p)^(1/p); +infinity where the row sums are not
  /// p-summable (sender rows are constant).
  double norm_p_one(double p) const;

  /// eps_tail(N) = sup_{i<=N} sum_{j>N} kappa_ij. Since |sin| <= 1 this
  /// bounds the sup-norm RHS perturbation of dropping oscillators beyond N.
  double tail_bound(std::size_t n) const;

  /// Constructive witness for the row-ratio condition, where one exists.
  std::optional<TildeKappa> tilde_kappa() const;

  /// Sender regularization parameter used in tilde_kappa (default 2^-20).
  void set_tilde_epsilon(double eps) { tilde_epsilon_ = eps; }
  double tilde_epsilon() const { return tilde_epsilon_; }

  /// Sender weight kappa_j (throws WrongFamily otherwise).
  const PositiveSequence& sender_weights() const;

  /// Generator sequence of a ProductSummable family (throws WrongFamily otherwise).
  const PositiveSequence& product_sequence() const;

  std::string family_name() const;

 private:
  CouplingMatrix() = default;

  Family family_ = Family::FiniteEmbedded;
  bool symmetric_ = true;
  double tilde_epsilon_ = 0x1.0p-20;

  std::optional<PositiveSequence> seq_;          // ProductSummable / Sender
  double base_ = 0.0;                            // GeometricCross
  std::vector<std::vector<double>> entries_;     // FiniteEmbedded
  std::size_t block_n_ = 0;                      // FiniteEmbedded / UniformFinite
  double strength_ = 0.0;                        // UniformFinite
};

/// Framework validation report. A framework is only claimed to hold when a
/// witness for it was actually computed.
struct FrameworkReport {
  bool f1_holds = false;
  double initial_diameter = 0.0;

  bool f2_holds = false;
  std::optional<TildeKappa> witness;
  double witness_l1 = 0.0;

  bool f3_holds = false;
  double norm_minus_inf_one = 0.0;

  std::vector<std::string> notes;
};

/// Checks the initial-diameter, witness-sequence and row-infimum conditions.
/// The row-ratio inequality is verified symbolically for families with a
/// witness formula and sampled on a deterministic index grid otherwise.
FrameworkReport validate_framework(const CouplingMatrix& k, const PhaseState& theta_in,
                                   const FrequencyVector& nu, std::size_t sample_budget);

}  // namespace ikm
