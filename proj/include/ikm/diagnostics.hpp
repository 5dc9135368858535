#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "ikm/check.hpp"
#include "ikm/dynamics.hpp"
#include "ikm/ensemble.hpp"
#include "ikm/topology.hpp"

namespace ikm {

inline constexpr double kRFloor = 1e-9;
inline constexpr double kGapFloor = 1e-6;

/// Weighted circular centroid r e^{i phi} = sum kappa_k e^{i theta_k}.
/// phi is absent below the r floor (the angle of a near-zero vector is noise).
struct OrderParameters {
  double r = 0.0;
  std::optional<double> phi;
};

OrderParameters order_parameters(const PhaseState& theta, const PositiveSequence& kappa);

/// r(t) nondecreasing within 1e-9 per step, plus the final-time dichotomy:
/// either r stayed at zero throughout or the weighted sin^2 residual is small.
CheckResult r_monotonicity_check(const Trajectory& trajectory, const CouplingMatrix& k);

/// P(Theta) = 1/2 sum_{i != j} kappa_ij (1 - cos(theta_i - theta_j)).
/// Defined for symmetric summable topologies only.
double potential(const PhaseState& theta, const CouplingMatrix& k);

/// Central-difference dP/dt against -||Theta_dot||_2^2 at interior samples,
/// P nonincreasing, and the first/second derivative magnitude bounds.
CheckResult lyapunov_identity_check(const Trajectory& trajectory, const CouplingMatrix& k);

/// Finite-difference gradient of the potential against the negated coupling
/// RHS, plus the quadratic remainder bound on seeded perturbations.
CheckResult gradient_check(const PhaseState& theta, const CouplingMatrix& k, double h_fd,
                           std::uint64_t seed = 0, std::size_t perturbations = 0);

/// C_ijkl = (z_i - z_k)/(z_i - z_j) * (z_j - z_l)/(z_k - z_l), z = e^{i theta}.
/// Throws DegenerateTuple when any pairwise chordal gap is below the floor.
std::complex<double> cross_ratio(const PhaseState& theta, std::size_t i, std::size_t j,
                                 std::size_t k, std::size_t l);

/// Max deviation |C(t) - C(0)| per tuple; tuples that degenerate late are
/// truncated at the last valid sample and flagged rather than failed.
CheckResult cross_ratio_constancy_check(const Trajectory& trajectory,
                                        const std::vector<std::array<std::size_t, 4>>& tuples);

struct AsymptoticClass {
  enum class Kind { FullSync, BiCluster, Unresolved };
  Kind kind = Kind::Unresolved;
  double theta_limit = 0.0;          // FullSync
  std::size_t outlier_index = 0;     // BiCluster, 1-based
  int sign = 0;                      // BiCluster
  std::vector<double> residuals;     // per-index distance to the candidate set
};

/// Matches the final state against the full-sync / bi-cluster candidate set
/// around theta0. Throws NotConverged unless the run reached equilibrium.
AsymptoticClass classify_asymptotic(const PhaseState& final_theta, const PositiveSequence& kappa,
                                    double theta0, double tol, bool equilibrium_reached);

/// gamma = asin(d_nu / (tilde_kappa_l1 * k_minus)); throws HypothesisViolated
/// outside the strict hypothesis 0 < d_nu < tilde_kappa_l1 * k_minus.
double practical_sync_gamma(double d_nu, double tilde_kappa_l1, double k_minus);

/// sup of d_theta over the trailing `window` fraction of samples <= gamma + slack.
CheckResult practical_sync_check(const Trajectory& trajectory, double gamma, double window,
                                 double slack = 0.05);

/// Quarter-arc entrance detection plus the exponential envelope on D(W) and
/// a fitted tail decay rate.
CheckResult frequency_decay_check(const Trajectory& trajectory, const CouplingMatrix& k);

/// Samples the two trigonometric inequalities on hypothesis-respecting inputs.
CheckResult trig_lemma_checks(std::size_t sample_count, std::uint64_t seed);

}  // namespace ikm
