#pragma once

#include <cstddef>
#include <vector>

#include "ikm/check.hpp"
#include "ikm/ensemble.hpp"
#include "ikm/record.hpp"
#include "ikm/topology.hpp"

namespace ikm {

struct Scenario;

/// Fixed-step RK4 parameters. step <= 0 requests the automatic certified
/// step step_safety / (2*||K||_inf1 + ||V||_inf).
struct IntegratorConfig {
  double step = 0.0;
  double t_end = 1.0;
  double step_safety = 0.1;
};

/// Largest step the Lipschitz certificate allows for this topology and
/// frequency vector.
double max_stable_step(const CouplingMatrix& k, const FrequencyVector& nu, std::size_t n,
                       double step_safety = 0.1);

/// f_i = nu_i + sum_{j<=N} kappa_ij sin(theta_j - theta_i), compensated
/// summation ascending in j.
std::vector<double> rhs(const CouplingMatrix& k, const FrequencyVector& nu,
                        const PhaseState& theta);

/// Sender-only O(N) evaluation through the complex order parameter:
/// f_i = nu_i + Im(S e^{-i theta_i}) with S = sum kappa_k e^{i theta_k}.
std::vector<double> rhs_sender_fast(const CouplingMatrix& k, const FrequencyVector& nu,
                                    const PhaseState& theta);

/// One classical RK4 step; time advances by exactly h.
PhaseState step_rk4(const CouplingMatrix& k, const FrequencyVector& nu, const PhaseState& theta,
                    double h);

/// omega_i(0) for the second-order sender formulation (equals rhs at t=0).
FrequencyState second_order_init(const CouplingMatrix& k, const FrequencyVector& nu,
                                 const PhaseState& theta_in);

/// omega_dot_i = sum_j kappa_j cos(theta_i - theta_j)(omega_j - omega_i).
std::vector<double> second_order_rhs(const CouplingMatrix& k, const PhaseState& theta,
                                     const FrequencyState& omega);

struct Trajectory {
  std::vector<double> sample_times;
  std::vector<PhaseState> states;
  std::vector<FrequencyState> omega_states;  // empty unless second-order
  std::vector<DiagnosticsRecord> records;
  double tail_certificate = 0.0;  // tail_bound(K, N) * t_end
  bool equilibrium_reached = false;
};

/// Fixed-step march over [0, t_end] per the scenario, emitting a
/// DiagnosticsRecord every sample_stride steps (plus the initial state).
Trajectory integrate(const Scenario& scenario);

/// Checks the two-sided Lipschitz bound and the magnitude bound of the RHS
/// in the given l^p norm.
CheckResult lipschitz_check(const CouplingMatrix& k, const FrequencyVector& nu,
                            const PhaseState& theta_a, const PhaseState& theta_b, double p);

/// Checks the first/second derivative bounds (componentwise and pairwise)
/// at every trajectory sample; second derivatives are analytic, not finite
/// differences.
CheckResult derivative_bounds_check(const Trajectory& trajectory, const CouplingMatrix& k,
                                    const FrequencyVector& nu);

}  // namespace ikm
