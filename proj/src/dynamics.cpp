#include "ikm/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "ikm/compensated.hpp"
#include "ikm/diagnostics.hpp"
#include "ikm/errors.hpp"
#include "ikm/scenario.hpp"

namespace ikm {

namespace {

void require_lengths(const FrequencyVector& nu, std::size_t n) {
  if (!nu.is_homogeneous() && nu.length() < n) {
    throw DimensionMismatch("per-index frequency vector shorter than truncation");
  }
}

// Stacked (theta, omega) derivative for the second-order sender system.
std::vector<double> stacked_rhs(const CouplingMatrix& k, const std::vector<double>& y,
                                std::size_t n) {
  std::vector<double> dy(2 * n);
  for (std::size_t i = 0; i < n; ++i) dy[i] = y[n + i];
  for (std::size_t i = 0; i < n; ++i) {
    CompensatedSum acc;
    for (std::size_t j = 0; j < n; ++j) {
      acc.add(k.sender_weights().term(j + 1) * std::cos(y[i] - y[j]) * (y[n + j] - y[n + i]));
    }
    dy[n + i] = acc.value();
  }
  return dy;
}

template <typename F>
std::vector<double> rk4_step(const F& f, const std::vector<double>& y, double h) {
  const std::size_t n = y.size();
  std::vector<double> k1 = f(y);
  std::vector<double> tmp(n);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
  std::vector<double> k2 = f(tmp);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
  std::vector<double> k3 = f(tmp);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
  std::vector<double> k4 = f(tmp);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return out;
}

}  // namespace

double max_stable_step(const CouplingMatrix& k, const FrequencyVector& nu, std::size_t n,
                       double step_safety) {
  return step_safety / (2.0 * k.norm_inf_one() + nu.inf_norm(n));
}

std::vector<double> rhs(const CouplingMatrix& k, const FrequencyVector& nu,
                        const PhaseState& theta) {
  const std::size_t n = theta.truncation();
  require_lengths(nu, n);
  std::vector<double> f(n);
  for (std::size_t i = 1; i <= n; ++i) {
    CompensatedSum acc;
    for (std::size_t j = 1; j <= n; ++j) {
      acc.add(k.entry(i, j) * std::sin(theta.phases[j - 1] - theta.phases[i - 1]));
    }
    f[i - 1] = nu.at(i) + acc.value();
  }
  return f;
}

std::vector<double> rhs_sender_fast(const CouplingMatrix& k, const FrequencyVector& nu,
                                    const PhaseState& theta) {
  if (!k.is_sender()) throw WrongFamily("fast RHS path requires a sender network");
  const std::size_t n = theta.truncation();
  require_lengths(nu, n);
  const PositiveSequence& kappa = k.sender_weights();
  CompensatedComplexSum s;
  for (std::size_t j = 1; j <= n; ++j) {
    s.add(kappa.term(j) * std::complex<double>(std::cos(theta.phases[j - 1]),
                                               std::sin(theta.phases[j - 1])));
  }
  const std::complex<double> sum = s.value();
  std::vector<double> f(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const double th = theta.phases[i - 1];
    const std::complex<double> rot(std::cos(-th), std::sin(-th));
    f[i - 1] = nu.at(i) + (sum * rot).imag();
  }
  return f;
}

PhaseState step_rk4(const CouplingMatrix& k, const FrequencyVector& nu, const PhaseState& theta,
                    double h) {
  const auto f = [&](const std::vector<double>& y) {
    PhaseState s{y, theta.time, theta.tail_model, theta.tail_phase};
    return k.is_sender() ? rhs_sender_fast(k, nu, s) : rhs(k, nu, s);
  };
  PhaseState out = theta;
  out.phases = rk4_step(f, theta.phases, h);
  out.time = theta.time + h;
  return out;
}

FrequencyState second_order_init(const CouplingMatrix& k, const FrequencyVector& nu,
                                 const PhaseState& theta_in) {
  if (!k.is_sender()) throw WrongFamily("second-order formulation requires a sender network");
  return FrequencyState{rhs_sender_fast(k, nu, theta_in), theta_in.time};
}

std::vector<double> second_order_rhs(const CouplingMatrix& k, const PhaseState& theta,
                                     const FrequencyState& omega) {
  if (!k.is_sender()) throw WrongFamily("second-order formulation requires a sender network");
  const std::size_t n = theta.truncation();
  if (omega.omegas.size() != n) {
    throw DimensionMismatch("frequency state length differs from phase state");
  }
  std::vector<double> y(2 * n);
  std::copy(theta.phases.begin(), theta.phases.end(), y.begin());
  std::copy(omega.omegas.begin(), omega.omegas.end(), y.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<double> dy = stacked_rhs(k, y, n);
  return {dy.begin() + static_cast<std::ptrdiff_t>(n), dy.end()};
}

Trajectory integrate(const Scenario& scenario) {
  const CouplingMatrix& k = scenario.topology;
  const FrequencyVector& nu = scenario.frequencies;
  const std::size_t n = scenario.truncation_n;
  if (scenario.initial_phases.size() != n) {
    throw ConfigError("initial condition length differs from truncation");
  }
  if (scenario.second_order && !k.is_sender()) {
    throw ConfigError("second-order integration requires a sender topology");
  }
  require_lengths(nu, n);

  const double h = scenario.resolved_step();
  const double t_end = scenario.integrator.t_end;
  std::size_t steps = static_cast<std::size_t>(std::llround(t_end / h));
  if (static_cast<double>(steps) * h < t_end - 1e-12 * t_end) ++steps;

  Trajectory traj;
  traj.tail_certificate = k.tail_bound(n) * t_end;

  PhaseState state = scenario.initial_state();
  std::vector<double> stacked;
  if (scenario.second_order) {
    FrequencyState w0 = second_order_init(k, nu, state);
    stacked.resize(2 * n);
    std::copy(state.phases.begin(), state.phases.end(), stacked.begin());
    std::copy(w0.omegas.begin(), w0.omegas.end(),
              stacked.begin() + static_cast<std::ptrdiff_t>(n));
  }

  const auto sample = [&](const PhaseState& s) {
    DiagnosticsRecord rec;
    rec.time = s.time;
    rec.d_theta = diameter(s);
    rec.tail_certificate = k.tail_bound(n);
    std::vector<double> f = k.is_sender() ? rhs_sender_fast(k, nu, s) : rhs(k, nu, s);
    rec.rhs_l2 = lp_norm(f, 2.0);
    rec.rhs_linf = lp_norm(f, std::numeric_limits<double>::infinity());
    if (k.is_sender()) {
      OrderParameters op = order_parameters(s, k.sender_weights());
      rec.r = op.r;
      rec.phi = op.phi;
      if (scenario.diagnostics.weighted_sum) {
        rec.weighted_s = weighted_sum(s, k.sender_weights());
      }
    }
    if (scenario.diagnostics.potential && k.symmetric_summable()) {
      rec.potential_p = potential(s, k);
    }
    if (scenario.second_order) {
      FrequencyState w{{stacked.begin() + static_cast<std::ptrdiff_t>(n), stacked.end()}, s.time};
      rec.d_omega = frequency_diameter(w);
      traj.omega_states.push_back(std::move(w));
    }
    if (scenario.diagnostics.cross_ratios) {
      for (const auto& tup : scenario.diagnostics.tuples) {
        CrossRatioSample cr;
        cr.indices = tup;
        try {
          cr.value = cross_ratio(s, tup[0], tup[1], tup[2], tup[3]);
        } catch (const DegenerateTuple&) {
          cr.valid = false;
        }
        rec.cross_ratios.push_back(cr);
      }
    }
    traj.sample_times.push_back(s.time);
    traj.states.push_back(s);
    traj.records.push_back(std::move(rec));
  };

  sample(state);
  for (std::size_t step = 1; step <= steps; ++step) {
    if (scenario.second_order) {
      stacked = rk4_step([&](const std::vector<double>& y) { return stacked_rhs(k, y, n); },
                         stacked, h);
      state.phases.assign(stacked.begin(), stacked.begin() + static_cast<std::ptrdiff_t>(n));
      state.time = static_cast<double>(step) * h;
    } else {
      state = step_rk4(k, nu, state, h);
      state.time = static_cast<double>(step) * h;
    }
    if (step % scenario.sample_stride == 0 || step == steps) sample(state);
  }
  traj.equilibrium_reached = traj.records.back().rhs_linf < scenario.equilibrium_tol;
  return traj;
}

CheckResult lipschitz_check(const CouplingMatrix& k, const FrequencyVector& nu,
                            const PhaseState& theta_a, const PhaseState& theta_b, double p) {
  if (theta_a.truncation() != theta_b.truncation()) {
    throw DimensionMismatch("lipschitz check requires equal truncations");
  }
  const std::size_t n = theta_a.truncation();
  std::vector<double> fa = rhs(k, nu, theta_a);
  std::vector<double> fb = rhs(k, nu, theta_b);
  std::vector<double> df(n), dtheta(n);
  for (std::size_t i = 0; i < n; ++i) {
    df[i] = fa[i] - fb[i];
    dtheta[i] = theta_a.phases[i] - theta_b.phases[i];
  }
  const double norm_p = k.norm_p_one(p);
  const double lhs = lp_norm(df, p);
  const double rhs_bound = 2.0 * norm_p * lp_norm(dtheta, p) * (1.0 + 0x1.0p-30);
  const double mag_lhs = lp_norm(fa, p);
  const double mag_bound = (nu.lp(p, n) + norm_p) * (1.0 + 0x1.0p-30);

  CheckResult res;
  res.name = "lipschitz_p" + std::to_string(p);
  double violation = 0.0;
  if (std::isfinite(rhs_bound)) violation = std::max(violation, lhs - rhs_bound);
  if (std::isfinite(mag_bound)) violation = std::max(violation, mag_lhs - mag_bound);
  res.worst = violation;
  res.status = violation <= 0.0 ? CheckStatus::Pass : CheckStatus::Fail;
  return res;
}

CheckResult derivative_bounds_check(const Trajectory& trajectory, const CouplingMatrix& k,
                                    const FrequencyVector& nu) {
  if (trajectory.states.size() < 3) {
    throw std::invalid_argument("derivative bounds need at least three samples");
  }
  const std::size_t n = trajectory.states.front().truncation();
  const double k_inf = k.norm_inf_one();
  const double v_inf = nu.inf_norm(n);
  const double d_v = nu.diameter(n);

  double min_margin = std::numeric_limits<double>::infinity();
  for (const PhaseState& s : trajectory.states) {
    std::vector<double> f = k.is_sender() ? rhs_sender_fast(k, nu, s) : rhs(k, nu, s);
    std::vector<double> sdd(n);
    for (std::size_t i = 1; i <= n; ++i) {
      CompensatedSum acc;
      for (std::size_t j = 1; j <= n; ++j) {
        acc.add(k.entry(i, j) * std::cos(s.phases[i - 1] - s.phases[j - 1]) *
                (f[j - 1] - f[i - 1]));
      }
      sdd[i - 1] = acc.value();
    }
    double f_max = f[0], f_min = f[0];
    double dd_max = sdd[0], dd_min = sdd[0];
    for (std::size_t i = 0; i < n; ++i) {
      // componentwise first-derivative bound
      min_margin = std::min(min_margin, v_inf + k_inf - std::abs(f[i]));
      // row-wise second-derivative bound
      min_margin = std::min(min_margin,
                            2.0 * (v_inf + k_inf) * k.row_sum(i + 1) - std::abs(sdd[i]));
      f_max = std::max(f_max, f[i]);
      f_min = std::min(f_min, f[i]);
      dd_max = std::max(dd_max, sdd[i]);
      dd_min = std::min(dd_min, sdd[i]);
    }
    // pairwise bounds; the extremal pair realizes the max difference
    min_margin = std::min(min_margin, d_v + 2.0 * k_inf - (f_max - f_min));
    min_margin = std::min(min_margin, 2.0 * k_inf * (d_v + 2.0 * k_inf) - (dd_max - dd_min));
  }

  CheckResult res;
  res.name = "derivative_bounds";
  res.worst = min_margin;
  res.status = min_margin >= 0.0 ? CheckStatus::Pass : CheckStatus::Fail;
  return res;
}

}  // namespace ikm
