#include "ikm/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ikm/compensated.hpp"
#include "ikm/errors.hpp"
#include "ikm/rng.hpp"

namespace ikm {

namespace {
constexpr double kPi = 3.14159265358979323846;

std::complex<double> unit(double theta) {
  return {std::cos(theta), std::sin(theta)};
}

// Least-squares slope of y over x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  return sxy / sxx;
}
}  // namespace

OrderParameters order_parameters(const PhaseState& theta, const PositiveSequence& kappa) {
  CompensatedComplexSum s;
  for (std::size_t i = 1; i <= theta.truncation(); ++i) {
    s.add(kappa.term(i) * unit(theta.phases[i - 1]));
  }
  const std::complex<double> z = s.value();
  OrderParameters op;
  op.r = std::abs(z);
  if (op.r >= kRFloor) op.phi = std::arg(z);
  return op;
}

CheckResult r_monotonicity_check(const Trajectory& trajectory, const CouplingMatrix& k) {
  const PositiveSequence& kappa = k.sender_weights();
  CheckResult res;
  res.name = "r_monotonicity";
  double worst_drop = 0.0;
  double r_max = 0.0;
  for (std::size_t s = 0; s < trajectory.records.size(); ++s) {
    const double r = trajectory.records[s].r;
    r_max = std::max(r_max, r);
    if (s > 0) worst_drop = std::max(worst_drop, trajectory.records[s - 1].r - r);
  }
  const double r0 = trajectory.records.front().r;
  double dichotomy = 0.0;
  std::ostringstream detail;
  if (r0 < kRFloor) {
    // branch 1: r identically zero
    dichotomy = r_max - 1e-6;
    detail << "r0=0 branch, max r=" << r_max;
  } else {
    const PhaseState& fin = trajectory.states.back();
    const OrderParameters op = order_parameters(fin, kappa);
    CompensatedSum acc;
    if (op.phi) {
      for (std::size_t i = 1; i <= fin.truncation(); ++i) {
        const double s = std::sin(fin.phases[i - 1] - *op.phi);
        acc.add(kappa.term(i) * s * s);
      }
    }
    const double residual = acc.value();
    detail << "final weighted sin^2 residual=" << residual;
    dichotomy = residual - 1e-6;
  }
  res.worst = std::max(worst_drop - 1e-9, dichotomy);
  res.status = res.worst <= 0.0 ? CheckStatus::Pass : CheckStatus::Fail;
  res.detail = detail.str();
  return res;
}

double potential(const PhaseState& theta, const CouplingMatrix& k) {
  if (!k.symmetric_summable()) {
    throw WrongFamily("potential requires a symmetric summable topology");
  }
  const std::size_t n = theta.truncation();
  CompensatedSum acc;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      acc.add(k.entry(i, j) * (1.0 - std::cos(theta.phases[i - 1] - theta.phases[j - 1])));
    }
  }
  return 0.5 * acc.value();
}

CheckResult lyapunov_identity_check(const Trajectory& trajectory, const CouplingMatrix& k) {
  CheckResult res;
  res.name = "lyapunov_identity";
  const auto& recs = trajectory.records;
  if (recs.size() < 3 || !recs.front().potential_p) {
    throw std::invalid_argument("lyapunov check needs >= 3 samples with potential tracked");
  }
  const double dp_bound = std::pow(k.norm_p_one(2.0), 2.0);
  const double d2p_bound = 2.0 * std::pow(k.norm_inf_one(), 2.0) * k.norm_p_one(1.0);

  std::size_t matched = 0, interior = 0;
  double worst = 0.0;
  for (std::size_t s = 1; s + 1 < recs.size(); ++s) {
    const double dt = recs[s + 1].time - recs[s - 1].time;
    const double dp = (*recs[s + 1].potential_p - *recs[s - 1].potential_p) / dt;
    const double target = -recs[s].rhs_l2 * recs[s].rhs_l2;
    const double tol = std::max(1e-6, 1e-3 * std::abs(target));
    ++interior;
    if (std::abs(dp - target) <= tol) ++matched;
    // magnitude bounds; central differences carry O(dt^2) error so allow a
    // small absolute slack on top of the analytic bound
    if (std::isfinite(dp_bound)) worst = std::max(worst, std::abs(dp) - dp_bound - 1e-6);
    const double h2 = (recs[s + 1].time - recs[s].time) * (recs[s].time - recs[s - 1].time);
    const double d2p =
        (*recs[s + 1].potential_p - 2.0 * *recs[s].potential_p + *recs[s - 1].potential_p) / h2;
    if (std::isfinite(d2p_bound)) worst = std::max(worst, std::abs(d2p) - d2p_bound - 1e-4);
  }
  // monotone decrease
  for (std::size_t s = 1; s < recs.size(); ++s) {
    worst = std::max(worst, *recs[s].potential_p - *recs[s - 1].potential_p - 1e-9);
  }
  const double frac = static_cast<double>(matched) / static_cast<double>(interior);
  std::ostringstream detail;
  detail << "identity matched at " << matched << "/" << interior << " interior samples";
  res.detail = detail.str();
  res.worst = std::max(worst, 0.99 - frac);
  res.status = (frac >= 0.99 && worst <= 0.0) ? CheckStatus::Pass : CheckStatus::Fail;
  return res;
}

CheckResult gradient_check(const PhaseState& theta, const CouplingMatrix& k, double h_fd,
                           std::uint64_t seed, std::size_t perturbations) {
  if (!(h_fd >= 0x1.0p-20 && h_fd <= 0x1.0p-10)) {
    throw std::invalid_argument("finite-difference step out of range");
  }
  if (!k.symmetric_summable()) {
    throw WrongFamily("gradient check requires a symmetric summable topology");
  }
  CheckResult res;
  res.name = "gradient";
  const std::size_t n = theta.truncation();
  const double k11 = k.norm_p_one(1.0);
  const double tol = std::max(1e-6, 4.0 * h_fd * h_fd * k11);

  // Phi_k = dP/dtheta_k = sum_j kappa_kj sin(theta_k - theta_j) = -rhs with nu=0
  std::vector<double> phi(n);
  for (std::size_t i = 1; i <= n; ++i) {
    CompensatedSum acc;
    for (std::size_t j = 1; j <= n; ++j) {
      acc.add(k.entry(i, j) * std::sin(theta.phases[i - 1] - theta.phases[j - 1]));
    }
    phi[i - 1] = acc.value();
  }

  double worst = 0.0;
  PhaseState probe = theta;
  for (std::size_t c = 0; c < n; ++c) {
    probe.phases[c] = theta.phases[c] + h_fd;
    const double p_plus = potential(probe, k);
    probe.phases[c] = theta.phases[c] - h_fd;
    const double p_minus = potential(probe, k);
    probe.phases[c] = theta.phases[c];
    const double fd = (p_plus - p_minus) / (2.0 * h_fd);
    worst = std::max(worst, std::abs(fd - phi[c]) - tol);
  }

  // quadratic remainder bound on seeded perturbations
  const double p0 = potential(theta, k);
  CounterRng rng(seed, 7);
  std::uint64_t ctr = 0;
  for (std::size_t s = 0; s < perturbations; ++s) {
    std::vector<double> h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = 2.0 * rng.uniform(ctr++) - 1.0;
    const double target = (1.0 / std::sqrt(2.0)) * 0.99 * rng.uniform(ctr++);
    const double norm = lp_norm(h, 2.0);
    for (double& v : h) v *= target / norm;

    PhaseState shifted = theta;
    for (std::size_t i = 0; i < n; ++i) shifted.phases[i] += h[i];
    CompensatedSum inner;
    for (std::size_t i = 0; i < n; ++i) inner.add(phi[i] * h[i]);
    const double remainder = std::abs(potential(shifted, k) - p0 - inner.value());

    CompensatedSum mid_acc;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        if (i == j) continue;
        const double d = h[i - 1] - h[j - 1];
        mid_acc.add(k.entry(i, j) * d * d);
      }
    }
    const double mid = 0.5 * mid_acc.value();
    const double outer = k11 * target * target;
    const double slack = 1e-12 * (1.0 + p0);
    worst = std::max(worst, remainder - mid - slack);
    worst = std::max(worst, mid - outer - slack);
  }

  res.worst = worst;
  res.status = worst <= 0.0 ? CheckStatus::Pass : CheckStatus::Fail;
  return res;
}

std::complex<double> cross_ratio(const PhaseState& theta, std::size_t i, std::size_t j,
                                 std::size_t k, std::size_t l) {
  const std::size_t idx[4] = {i, j, k, l};
  for (int a = 0; a < 4; ++a) {
    if (idx[a] == 0 || idx[a] > theta.truncation()) {
      throw std::invalid_argument("cross-ratio index out of range");
    }
    for (int b = a + 1; b < 4; ++b) {
      if (idx[a] == idx[b]) throw DegenerateTuple("repeated index in cross-ratio tuple");
    }
  }
  std::complex<double> z[4];
  for (int a = 0; a < 4; ++a) z[a] = unit(theta.phases[idx[a] - 1]);
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      if (std::abs(z[a] - z[b]) < kGapFloor) {
        throw DegenerateTuple("chordal gap below floor");
      }
    }
  }
  return (z[0] - z[2]) / (z[0] - z[1]) * ((z[1] - z[3]) / (z[2] - z[3]));
}

CheckResult cross_ratio_constancy_check(const Trajectory& trajectory,
                                        const std::vector<std::array<std::size_t, 4>>& tuples) {
  CheckResult res;
  res.name = "cross_ratio_constancy";
  double worst = -std::numeric_limits<double>::infinity();
  std::size_t flagged = 0, failed = 0;
  for (const auto& tup : tuples) {
    std::complex<double> c0;
    try {
      c0 = cross_ratio(trajectory.states.front(), tup[0], tup[1], tup[2], tup[3]);
    } catch (const DegenerateTuple&) {
      ++flagged;
      continue;
    }
    double dev = 0.0;
    bool truncated = false;
    for (std::size_t s = 1; s < trajectory.states.size(); ++s) {
      try {
        const std::complex<double> c =
            cross_ratio(trajectory.states[s], tup[0], tup[1], tup[2], tup[3]);
        dev = std::max(dev, std::abs(c - c0));
      } catch (const DegenerateTuple&) {
        truncated = true;
        break;
      }
    }
    const double tol = 1e-6 * (1.0 + std::abs(c0));
    if (truncated) {
      ++flagged;
    } else if (dev >= tol) {
      ++failed;
      worst = std::max(worst, dev - tol);
    } else {
      worst = std::max(worst, dev - tol);
    }
  }
  std::ostringstream detail;
  detail << tuples.size() - flagged - failed << " constant, " << flagged << " flagged, " << failed
         << " failed";
  res.detail = detail.str();
  res.worst = worst;
  if (failed > 0) {
    res.status = CheckStatus::Fail;
  } else if (flagged > 0) {
    res.status = CheckStatus::Flagged;
  } else {
    res.status = CheckStatus::Pass;
  }
  return res;
}

AsymptoticClass classify_asymptotic(const PhaseState& final_theta, const PositiveSequence& kappa,
                                    double theta0, double tol, bool equilibrium_reached) {
  if (!equilibrium_reached) {
    throw NotConverged("asymptotic classification requires an equilibrated run");
  }
  const std::size_t n = final_theta.truncation();
  const double tol_abs = tol * kPi;
  AsymptoticClass out;

  bool full_sync = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(final_theta.phases[i] - theta0) >= tol_abs) {
      full_sync = false;
      break;
    }
  }
  if (full_sync) {
    out.kind = AsymptoticClass::Kind::FullSync;
    CompensatedSum num, den;
    for (std::size_t i = 1; i <= n; ++i) {
      num.add(kappa.term(i) * final_theta.phases[i - 1]);
      den.add(kappa.term(i));
    }
    out.theta_limit = num.value() / den.value();
    for (std::size_t i = 0; i < n; ++i) {
      out.residuals.push_back(std::abs(final_theta.phases[i] - theta0));
    }
    return out;
  }

  // A bi-cluster state can match the candidate pattern for more than one
  // (outlier, sign) reading; the defecting oscillator is taken to be the one
  // with strictly smallest weight, and ties stay Unresolved.
  std::vector<std::pair<std::size_t, int>> matches;
  for (int s : {+1, -1}) {
    for (std::size_t j = 1; j <= n; ++j) {
      const double kj = kappa.term(j);
      const double outlier_target = theta0 + s * (1.0 - kj) * kPi;
      const double rest_target = theta0 - s * kj * kPi;
      if (std::abs(final_theta.phases[j - 1] - outlier_target) >= tol_abs) continue;
      bool rest_ok = true;
      for (std::size_t i = 1; i <= n && rest_ok; ++i) {
        if (i == j) continue;
        if (std::abs(final_theta.phases[i - 1] - rest_target) >= tol_abs) rest_ok = false;
      }
      if (rest_ok) matches.emplace_back(j, s);
    }
  }
  if (!matches.empty()) {
    std::size_t best = 0;
    bool unique = true;
    for (std::size_t m = 1; m < matches.size(); ++m) {
      const double km = kappa.term(matches[m].first);
      const double kb = kappa.term(matches[best].first);
      if (km < kb) {
        best = m;
        unique = true;
      } else if (km == kb && matches[m].first != matches[best].first) {
        unique = false;
      }
    }
    if (unique) {
      out.kind = AsymptoticClass::Kind::BiCluster;
      out.outlier_index = matches[best].first;
      out.sign = matches[best].second;
      return out;
    }
  }

  out.kind = AsymptoticClass::Kind::Unresolved;
  for (std::size_t i = 1; i <= n; ++i) {
    const double ki = kappa.term(i);
    const double th = final_theta.phases[i - 1];
    double best = std::abs(th - theta0);
    for (int s : {+1, -1}) {
      best = std::min(best, std::abs(th - (theta0 + s * ki * kPi)));
      best = std::min(best, std::abs(th - (theta0 + s * (1.0 - ki) * kPi)));
    }
    out.residuals.push_back(best);
  }
  return out;
}

double practical_sync_gamma(double d_nu, double tilde_kappa_l1, double k_minus) {
  if (!(d_nu > 0.0) || !(tilde_kappa_l1 > 0.0) || !(k_minus > 0.0)) {
    throw HypothesisViolated("practical-sync gamma requires positive inputs");
  }
  const double ratio = d_nu / (tilde_kappa_l1 * k_minus);
  if (ratio >= 1.0) {
    throw HypothesisViolated("frequency diameter not dominated by the coupling strength");
  }
  return std::asin(ratio);
}

CheckResult practical_sync_check(const Trajectory& trajectory, double gamma, double window,
                                 double slack) {
  CheckResult res;
  res.name = "practical_sync";
  const double d0 = trajectory.records.front().d_theta;
  if (!(d0 > gamma && d0 < kPi - gamma)) {
    res.status = CheckStatus::NotApplicable;
    res.detail = "initial diameter outside (gamma, pi - gamma)";
    return res;
  }
  const std::size_t total = trajectory.records.size();
  const std::size_t start = total - std::max<std::size_t>(1, static_cast<std::size_t>(
                                                                 window * static_cast<double>(total)));
  double tail_sup = 0.0;
  for (std::size_t s = start; s < total; ++s) {
    tail_sup = std::max(tail_sup, trajectory.records[s].d_theta);
  }
  std::ostringstream detail;
  detail << "tail sup D=" << tail_sup << " vs gamma+slack=" << gamma + slack;
  res.detail = detail.str();
  res.worst = tail_sup - (gamma + slack);
  res.status = res.worst <= 0.0 ? CheckStatus::Pass : CheckStatus::Fail;
  return res;
}

CheckResult frequency_decay_check(const Trajectory& trajectory, const CouplingMatrix& k) {
  CheckResult res;
  res.name = "frequency_decay";
  if (trajectory.omega_states.empty()) {
    throw std::invalid_argument("frequency decay check needs a second-order trajectory");
  }
  constexpr double kMargin = 0.01;
  const auto& recs = trajectory.records;
  std::size_t t0_idx = recs.size();
  for (std::size_t s = 0; s < recs.size(); ++s) {
    if (recs[s].d_theta < kPi / 2.0 - kMargin) {
      t0_idx = s;
      break;
    }
  }
  if (t0_idx == recs.size()) {
    throw NoEntranceTime("quarter-arc trap never observed within the horizon");
  }
  const double t0 = recs[t0_idx].time;
  const double d0 = *recs[t0_idx].d_omega;
  const double rate = 3.0 * k.norm_inf_one() * std::log(2.0) / 32.0;

  double worst = 0.0;
  std::vector<double> fit_t, fit_logd;
  for (std::size_t s = t0_idx; s < recs.size(); ++s) {
    const double dw = *recs[s].d_omega;
    const double envelope = d0 * std::exp(-rate * (recs[s].time - t0) + 1.0);
    worst = std::max(worst, dw - envelope);
    if (dw > 1e-13) {
      fit_t.push_back(recs[s].time);
      fit_logd.push_back(std::log(dw));
    }
  }
  double slope = 0.0;
  if (fit_t.size() >= 2) slope = fit_slope(fit_t, fit_logd);
  std::ostringstream detail;
  detail << "t0=" << t0 << " fitted rate=" << slope << " envelope rate=" << -rate;
  res.detail = detail.str();
  res.worst = std::max(worst, slope + 1e-3);
  res.status = (worst <= 0.0 && slope <= -1e-3) ? CheckStatus::Pass : CheckStatus::Fail;
  return res;
}

CheckResult trig_lemma_checks(std::size_t sample_count, std::uint64_t seed) {
  CheckResult res;
  res.name = "trig_lemmas";
  CounterRng rng(seed, 11);
  std::uint64_t ctr = 0;
  double worst = 0.0;

  // additive three-angle inequality on hypothesis-respecting samples
  for (std::size_t s = 0; s < sample_count; ++s) {
    const double eps1 = kPi * rng.uniform(ctr++);
    const double eps2 = eps1 * rng.uniform(ctr++);
    const double a = kPi + 2.0 * rng.uniform(ctr++);  // keeps a - eps2 positive
    const double c = a + (kPi - eps1) * rng.uniform(ctr++);
    const double b = (a - eps2) + (c + eps2 - (a - eps2)) * rng.uniform(ctr++);
    const double lhs = std::sin(c - a) + std::sin(a - b) + std::sin(b - c);
    const double bound = 4.0 * std::sin(eps2 / 2.0);
    worst = std::max(worst, lhs - bound - 1e-15);
  }

  // product-to-sum remainder bound
  for (std::size_t s = 0; s < sample_count; ++s) {
    const double theta = 2.0 * kPi * rng.uniform(ctr++) - kPi;
    const double h = 2.0 * rng.uniform(ctr++) - 1.0;
    const double lhs =
        std::abs(2.0 * std::sin(theta + h / 2.0) * std::sin(h / 2.0) - h * std::sin(theta));
    worst = std::max(worst, lhs - h * h - 1e-15);
  }

  res.worst = worst;
  res.status = worst <= 0.0 ? CheckStatus::Pass : CheckStatus::Fail;
  return res;
}

}  // namespace ikm
