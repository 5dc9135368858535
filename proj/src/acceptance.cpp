#include "ikm/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "ikm/diagnostics.hpp"
#include "ikm/dynamics.hpp"
#include "ikm/rng.hpp"
#include "ikm/run.hpp"
#include "ikm/scenario.hpp"
#include "ikm/topology.hpp"

namespace ikm {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Criterion {
  int number;
  const char* name;
  std::function<std::pair<bool, std::string>(const std::filesystem::path&)> fn;
};

// kappa_j = 2^-j over [n], renormalized to sum exactly 1.
CouplingMatrix sender_dyadic(std::size_t n) {
  std::vector<double> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = std::ldexp(1.0, -static_cast<int>(j + 1));
  return CouplingMatrix::sender(PositiveSequence::explicit_values(std::move(w)), true);
}

std::vector<double> arc_phases(std::size_t n, double width, std::uint64_t seed,
                               double center = 0.0) {
  CounterRng rng(seed, 1);
  std::vector<double> phases(n);
  for (std::size_t i = 0; i < n; ++i) {
    phases[i] = center - width / 2.0 + width * rng.uniform(i);
  }
  return phases;
}

FrequencyVector seeded_frequencies(std::size_t n, double diameter, std::uint64_t seed) {
  CounterRng rng(seed, 2);
  std::vector<double> raw(n);
  for (std::size_t i = 0; i < n; ++i) raw[i] = rng.uniform(i);
  const auto [lo, hi] = std::minmax_element(raw.begin(), raw.end());
  const double span = *hi - *lo;
  for (double& v : raw) v = diameter * ((v - *lo) / span - 0.5);
  return FrequencyVector::per_index(std::move(raw));
}

Scenario make_scenario(std::string name, CouplingMatrix k, std::vector<double> phases,
                       FrequencyVector nu, double step, double t_end,
                       std::size_t stride = 1) {
  Scenario sc;
  sc.name = std::move(name);
  sc.truncation_n = phases.size();
  sc.topology = std::move(k);
  sc.initial_phases = std::move(phases);
  sc.frequencies = std::move(nu);
  sc.integrator.step = step;
  sc.integrator.t_end = t_end;
  sc.sample_stride = stride;
  sc.canonical_config = sc.name;
  return sc;
}

std::pair<bool, std::string> verdict(bool pass, const std::ostringstream& detail) {
  return {pass, detail.str()};
}

// --- criterion bodies -------------------------------------------------------

std::pair<bool, std::string> constant_diameter(const std::filesystem::path&) {
  Scenario sc = make_scenario("constant_diameter", CouplingMatrix::geometric_cross(3.0),
                              std::vector<double>(20), FrequencyVector::homogeneous(0.0), 0.05,
                              50.0);
  for (std::size_t i = 1; i <= 20; ++i) {
    sc.initial_phases[i - 1] = (i % 2 == 0 ? 1.0 : -1.0) * kPi / 3.0;
  }
  Trajectory traj = integrate(sc);
  double worst = 0.0;
  for (const auto& rec : traj.records) {
    worst = std::max(worst, std::abs(rec.d_theta - 2.0 * kPi / 3.0));
  }
  std::ostringstream d;
  d << "max |D - 2pi/3| = " << worst;
  return verdict(worst < 1e-3, d);
}

std::pair<bool, std::string> diameter_monotone(const std::filesystem::path&) {
  double worst = -1.0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Scenario sc = make_scenario(
        "diameter_monotone", CouplingMatrix::product_summable(PositiveSequence::geometric(0.5, 0.5)),
        arc_phases(32, 0.9 * kPi, seed), FrequencyVector::homogeneous(0.0), 0.05, 100.0, 4);
    Trajectory traj = integrate(sc);
    for (std::size_t s = 1; s < traj.records.size(); ++s) {
      worst = std::max(worst, traj.records[s].d_theta - traj.records[s - 1].d_theta);
    }
  }
  std::ostringstream d;
  d << "max sample-to-sample diameter increase = " << worst;
  return verdict(worst <= 1e-9, d);
}

Scenario sync_scenario() {
  std::vector<double> phases(32, 0.0);
  phases[0] = 1.3;
  phases[1] = -1.2;
  Scenario sc = make_scenario(
      "complete_sync", CouplingMatrix::product_summable(PositiveSequence::geometric(0.5, 0.5)),
      std::move(phases), FrequencyVector::homogeneous(0.0), 0.025, 200.0);
  sc.diagnostics.potential = true;
  return sc;
}

std::pair<bool, std::string> complete_sync(const std::filesystem::path&) {
  Trajectory traj = integrate(sync_scenario());
  const double final_l2 = traj.records.back().rhs_l2;
  std::ostringstream d;
  d << "final phase-velocity l2 norm = " << final_l2;
  return verdict(final_l2 < 1e-4, d);
}

std::pair<bool, std::string> lyapunov_identity(const std::filesystem::path&) {
  Scenario sc = sync_scenario();
  Trajectory traj = integrate(sc);
  CheckResult res = lyapunov_identity_check(traj, sc.topology);
  std::ostringstream d;
  d << res.detail << ", worst margin " << res.worst;
  return verdict(res.passed(), d);
}

std::pair<bool, std::string> gradient_flow(const std::filesystem::path&) {
  CouplingMatrix k = CouplingMatrix::product_summable(PositiveSequence::geometric(0.5, 0.5));
  double worst = -1.0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    PhaseState theta{arc_phases(10, 2.5, seed), 0.0, TailModel::Dropped, 0.0};
    CheckResult res = gradient_check(theta, k, 0x1.0p-12, seed, 10);
    worst = std::max(worst, res.worst);
  }
  std::ostringstream d;
  d << "worst gradient/remainder margin = " << worst;
  return verdict(worst <= 0.0, d);
}

std::pair<bool, std::string> lipschitz_bounds(const std::filesystem::path&) {
  const std::vector<CouplingMatrix> families = {
      CouplingMatrix::product_summable(PositiveSequence::geometric(0.5, 0.5)),
      CouplingMatrix::geometric_cross(3.0),
      CouplingMatrix::sender(PositiveSequence::geometric(0.5, 0.5), true),
      CouplingMatrix::finite_embedded({{0.0, 1.0}, {1.0, 0.0}}),
      CouplingMatrix::uniform_finite(4, 2.0)};
  const double ps[3] = {1.0, 2.0, std::numeric_limits<double>::infinity()};
  const FrequencyVector nu = FrequencyVector::homogeneous(0.0);
  std::size_t violations = 0;
  double worst = -1.0;
  for (std::size_t f = 0; f < families.size(); ++f) {
    CounterRng rng(99, 20 + f);
    std::uint64_t ctr = 0;
    for (int pair = 0; pair < 1000; ++pair) {
      PhaseState a{std::vector<double>(12), 0.0, TailModel::Dropped, 0.0};
      PhaseState b = a;
      for (std::size_t i = 0; i < 12; ++i) {
        a.phases[i] = 2.0 * kPi * rng.uniform(ctr++) - kPi;
        b.phases[i] = 2.0 * kPi * rng.uniform(ctr++) - kPi;
      }
      for (double p : ps) {
        CheckResult res = lipschitz_check(families[f], nu, a, b, p);
        worst = std::max(worst, res.worst);
        if (!res.passed()) ++violations;
      }
    }
  }
  std::ostringstream d;
  d << violations << " violations over 15000 pair checks, worst margin " << worst;
  return verdict(violations == 0, d);
}

std::pair<bool, std::string> derivative_bounds(const std::filesystem::path&) {
  double worst = std::numeric_limits<double>::infinity();

  Scenario c1 = make_scenario("deriv_c1", CouplingMatrix::geometric_cross(3.0),
                              std::vector<double>(20), FrequencyVector::homogeneous(0.0), 0.05,
                              50.0, 4);
  for (std::size_t i = 1; i <= 20; ++i) {
    c1.initial_phases[i - 1] = (i % 2 == 0 ? 1.0 : -1.0) * kPi / 3.0;
  }
  Scenario c2 = make_scenario(
      "deriv_c2", CouplingMatrix::product_summable(PositiveSequence::geometric(0.5, 0.5)),
      arc_phases(32, 0.9 * kPi, 1), FrequencyVector::homogeneous(0.0), 0.05, 100.0, 8);
  Scenario c3 = sync_scenario();
  c3.sample_stride = 8;

  for (const Scenario* sc : {&c1, &c2, &c3}) {
    Trajectory traj = integrate(*sc);
    CheckResult res = derivative_bounds_check(traj, sc->topology, sc->frequencies);
    worst = std::min(worst, res.worst);
    if (!res.passed()) {
      std::ostringstream d;
      d << "violation in run " << sc->name << ", margin " << res.worst;
      return verdict(false, d);
    }
  }
  std::ostringstream d;
  d << "all four bounds hold, min margin " << worst;
  return verdict(true, d);
}

std::pair<bool, std::string> sender_conservation(const std::filesystem::path&) {
  Scenario sc = make_scenario("conservation", sender_dyadic(24), arc_phases(24, 1.5, 42),
                              FrequencyVector::homogeneous(0.0), 0.05, 100.0);
  sc.diagnostics.weighted_sum = true;
  Trajectory traj = integrate(sc);
  const double s0 = *traj.records.front().weighted_s;
  double worst = 0.0;
  for (const auto& rec : traj.records) {
    worst = std::max(worst, std::abs(*rec.weighted_s - s0));
  }
  std::ostringstream d;
  d << "max |S(t) - S(0)| = " << worst;
  return verdict(worst < 1e-8, d);
}

std::pair<bool, std::string> order_parameter_monotone(const std::filesystem::path&) {
  std::ostringstream d;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Scenario sc = make_scenario("r_monotone", sender_dyadic(16), arc_phases(16, 2.0, seed),
                                FrequencyVector::homogeneous(0.0), 0.05, 100.0);
    Trajectory traj = integrate(sc);
    if (traj.records.front().r <= 1e-3) {
      d << "seed " << seed << " drew r(0) <= 1e-3, scenario not generic";
      return verdict(false, d);
    }
    CheckResult res = r_monotonicity_check(traj, sc.topology);
    if (!res.passed()) {
      d << "seed " << seed << ": " << res.detail << ", margin " << res.worst;
      return verdict(false, d);
    }
  }

  // antipodal construction: r below the floor, a fixed point of the discrete
  // map (the O(1e-16) residual force is below half an ulp of pi/2)
  Scenario anti = make_scenario(
      "r_antipodal",
      CouplingMatrix::sender(PositiveSequence::explicit_values({0.5, 0.5}), false),
      {kPi / 2.0, -kPi / 2.0}, FrequencyVector::homogeneous(0.0), 0.05, 50.0);
  Trajectory traj = integrate(anti);
  double drift = 0.0;
  for (const PhaseState& s : traj.states) {
    drift = std::max(drift, std::abs(s.phases[0] - kPi / 2.0));
    drift = std::max(drift, std::abs(s.phases[1] + kPi / 2.0));
  }
  CheckResult res = r_monotonicity_check(traj, anti.topology);
  d << "20 seeds monotone with converged residuals; antipodal drift " << drift;
  return verdict(res.passed() && drift < 1e-12, d);
}

std::pair<bool, std::string> phase_quantization(const std::filesystem::path&) {
  std::ostringstream d;
  std::size_t full_sync = 0, bi_cluster = 0;
  double worst_gap = 0.0, worst_limit = 0.0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Scenario sc = make_scenario("quantization", sender_dyadic(16), arc_phases(16, 2.0, seed),
                                FrequencyVector::homogeneous(0.0), 0.05, 300.0, 20);
    sc.diagnostics.weighted_sum = true;
    Trajectory traj = integrate(sc);
    if (traj.records.front().r <= 1e-3) {
      d << "seed " << seed << " drew r(0) <= 1e-3";
      return verdict(false, d);
    }
    const PhaseState& fin = traj.states.back();
    for (std::size_t i = 0; i < fin.truncation(); ++i) {
      for (std::size_t j = i + 1; j < fin.truncation(); ++j) {
        const double diff = fin.phases[i] - fin.phases[j];
        const double dist = std::abs(diff - kPi * std::round(diff / kPi));
        worst_gap = std::max(worst_gap, dist);
      }
    }
    const double theta0 = *traj.records.front().weighted_s;
    AsymptoticClass cls = classify_asymptotic(fin, sc.topology.sender_weights(), theta0, 1e-3,
                                              traj.equilibrium_reached);
    if (cls.kind == AsymptoticClass::Kind::FullSync) {
      ++full_sync;
      worst_limit = std::max(worst_limit, std::abs(cls.theta_limit - theta0));
    } else if (cls.kind == AsymptoticClass::Kind::BiCluster) {
      ++bi_cluster;
    } else {
      d << "seed " << seed << " unresolved classification";
      return verdict(false, d);
    }
  }
  d << full_sync << " full-sync / " << bi_cluster << " bi-cluster; worst pi-multiple distance "
    << worst_gap << ", worst limit offset " << worst_limit;
  return verdict(worst_gap < 1e-3 && worst_limit < 1e-3, d);
}

std::pair<bool, std::string> collision_avoidance(const std::filesystem::path&) {
  std::size_t violations = 0;
  double max_gap = 0.0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Scenario sc = make_scenario("collision", sender_dyadic(16), arc_phases(16, 2.0, seed),
                                FrequencyVector::homogeneous(0.0), 0.05, 20.0);
    Trajectory traj = integrate(sc);
    std::vector<std::size_t> order(16);
    for (std::size_t i = 0; i < 16; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return sc.initial_phases[a] < sc.initial_phases[b];
    });
    for (const PhaseState& s : traj.states) {
      for (std::size_t k = 1; k < order.size(); ++k) {
        if (s.phases[order[k]] < s.phases[order[k - 1]]) ++violations;
        const double gap = s.phases[order[k]] - s.phases[order[0]];
        max_gap = std::max(max_gap, gap);
        if (gap < 0.0 || gap > 2.0 * kPi) ++violations;
      }
    }
  }
  std::ostringstream d;
  d << violations << " order/gap violations, max pairwise gap " << max_gap;
  return verdict(violations == 0, d);
}

std::pair<bool, std::string> cross_ratio_constancy(const std::filesystem::path&) {
  std::ostringstream d;

  Scenario sc = make_scenario("cross_ratio_n6", sender_dyadic(6),
                              {-1.2, -0.7, -0.2, 0.35, 0.9, 1.4},
                              FrequencyVector::homogeneous(0.0), 0.01, 10.0);
  std::vector<std::array<std::size_t, 4>> tuples;
  for (std::size_t i = 1; i <= 6; ++i)
    for (std::size_t j = i + 1; j <= 6; ++j)
      for (std::size_t k = j + 1; k <= 6; ++k)
        for (std::size_t l = k + 1; l <= 6; ++l) tuples.push_back({i, j, k, l});
  Trajectory traj = integrate(sc);
  CheckResult res = cross_ratio_constancy_check(traj, tuples);
  if (res.status == CheckStatus::Fail) {
    d << "6-oscillator sweep failed: " << res.detail;
    return verdict(false, d);
  }

  // equally spaced four-oscillator configuration: value 2 exactly
  Scenario eq = make_scenario(
      "cross_ratio_eq4",
      CouplingMatrix::sender(PositiveSequence::explicit_values({0.25, 0.25, 0.25, 0.25}), false),
      {0.0, kPi / 2.0, kPi, 1.5 * kPi}, FrequencyVector::homogeneous(0.0), 0.01, 10.0);
  Trajectory eq_traj = integrate(eq);
  double worst = 0.0;
  for (const PhaseState& s : eq_traj.states) {
    worst = std::max(worst, std::abs(cross_ratio(s, 1, 2, 3, 4) - std::complex<double>(2.0, 0.0)));
  }
  d << "6-oscillator sweep: " << res.detail << "; equally spaced |C - 2| max " << worst;
  return verdict(worst < 1e-8, d);
}

Scenario practical_sync_scenario(bool heterogeneous) {
  Scenario sc = make_scenario("practical_sync", sender_dyadic(16), arc_phases(16, 1.0, 3),
                              heterogeneous ? seeded_frequencies(16, 0.05, 3)
                                            : FrequencyVector::homogeneous(0.0),
                              0.04, 300.0, 5);
  return sc;
}

std::pair<bool, std::string> practical_sync(const std::filesystem::path&) {
  Scenario sc = practical_sync_scenario(true);
  std::ostringstream d;
  FrameworkReport fw = validate_framework(sc.topology, sc.initial_state(), sc.frequencies, 256);
  if (!(fw.f1_holds && fw.f2_holds && fw.f3_holds)) {
    d << "framework hypotheses failed validation";
    return verdict(false, d);
  }
  const double gamma = practical_sync_gamma(sc.frequencies.diameter(16), fw.witness_l1,
                                            fw.norm_minus_inf_one);
  Trajectory traj = integrate(sc);
  CheckResult res = practical_sync_check(traj, gamma, 0.2);
  d << "gamma = " << gamma << ", " << res.detail;
  return verdict(res.passed(), d);
}

std::pair<bool, std::string> homogeneous_decay(const std::filesystem::path&) {
  Scenario sc = practical_sync_scenario(false);
  Trajectory traj = integrate(sc);
  std::vector<double> ts, logd;
  for (const auto& rec : traj.records) {
    if (rec.d_theta > 1e-13) {
      ts.push_back(rec.time);
      logd.push_back(std::log(rec.d_theta));
    }
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    mx += ts[i];
    my += logd[i];
  }
  mx /= static_cast<double>(ts.size());
  my /= static_cast<double>(ts.size());
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    sxx += (ts[i] - mx) * (ts[i] - mx);
    sxy += (ts[i] - mx) * (logd[i] - my);
  }
  const double slope = sxy / sxx;
  const double final_d = traj.records.back().d_theta;
  std::ostringstream d;
  d << "fitted log-diameter slope " << slope << ", final diameter " << final_d;
  return verdict(slope < 0.0 && final_d < 1e-6, d);
}

std::pair<bool, std::string> frequency_envelope(const std::filesystem::path&) {
  Scenario sc = make_scenario("freq_envelope", sender_dyadic(8), arc_phases(8, 2.0, 9),
                              FrequencyVector::homogeneous(0.0), 0.05, 80.0);
  sc.second_order = true;
  Trajectory traj = integrate(sc);
  CheckResult res = frequency_decay_check(traj, sc.topology);
  std::ostringstream d;
  d << res.detail;
  return verdict(res.passed(), d);
}

std::pair<bool, std::string> trig_lemmas(const std::filesystem::path&) {
  CheckResult res = trig_lemma_checks(100000, 2024);
  std::ostringstream d;
  d << "worst inequality margin " << res.worst;
  return verdict(res.passed(), d);
}

const char* kDeterminismConfigs[2] = {
    R"({
  "schema_version": 1,
  "name": "det_constant_diameter",
  "topology": {"family": "geometric_cross", "base": 3.0},
  "truncation_n": 20,
  "initial": {"kind": "alternating"},
  "frequencies": {"kind": "zero"},
  "integrator": {"step": 0.05, "t_end": 50.0},
  "sample_stride": 4,
  "tail_budget": 1e-4
})",
    R"({
  "schema_version": 1,
  "name": "det_practical_sync",
  "topology": {"family": "sender", "normalized": true,
               "weights": {"kind": "geometric", "ratio": 0.5, "scale": 0.5}},
  "truncation_n": 16,
  "initial": {"kind": "uniform_arc", "width": 1.0, "seed": 3},
  "frequencies": {"kind": "seeded", "seed": 3, "diameter": 0.05},
  "integrator": {"step": 0.04, "t_end": 300.0},
  "sample_stride": 5,
  "tail_budget": 1e-2
})"};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::pair<bool, std::string> determinism(const std::filesystem::path& out_dir) {
  std::ostringstream d;
  std::vector<std::string> reference(2);
  for (int c = 0; c < 2; ++c) {
    Scenario sc = parse_scenario_text(kDeterminismConfigs[c]);
    RunReport rep = run(sc, out_dir / "det_serial");
    reference[c] = slurp(rep.csv_path);
  }
  // the same two scenarios under eight concurrent executions
  std::atomic<bool> identical{true};
  std::vector<std::thread> pool;
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&, t] {
      const int c = t % 2;
      Scenario sc = parse_scenario_text(kDeterminismConfigs[c]);
      RunReport rep = run(sc, out_dir / ("det_thread_" + std::to_string(t)));
      if (slurp(rep.csv_path) != reference[c]) identical = false;
    });
  }
  for (auto& th : pool) th.join();
  d << (identical ? "byte-identical CSV across serial and 8-way concurrent runs"
                  : "CSV outputs diverged across executions");
  return verdict(identical, d);
}

const Criterion kCriteria[] = {
    {1, "constant_diameter", constant_diameter},
    {2, "diameter_monotone", diameter_monotone},
    {3, "complete_sync", complete_sync},
    {4, "lyapunov_identity", lyapunov_identity},
    {5, "gradient_flow", gradient_flow},
    {6, "lipschitz_bounds", lipschitz_bounds},
    {7, "derivative_bounds", derivative_bounds},
    {8, "sender_conservation", sender_conservation},
    {9, "order_parameter_monotone", order_parameter_monotone},
    {10, "phase_quantization", phase_quantization},
    {11, "collision_avoidance", collision_avoidance},
    {12, "cross_ratio_constancy", cross_ratio_constancy},
    {13, "practical_sync", practical_sync},
    {14, "homogeneous_decay", homogeneous_decay},
    {15, "frequency_envelope", frequency_envelope},
    {16, "trig_lemmas", trig_lemmas},
    {17, "determinism", determinism},
};

}  // namespace

std::vector<AcceptanceOutcome> acceptance_suite(const std::string& filter,
                                                const std::filesystem::path& out_dir,
                                                unsigned threads) {
  std::vector<const Criterion*> selected;
  for (const Criterion& c : kCriteria) {
    if (filter.empty() || std::string(c.name).find(filter) != std::string::npos) {
      selected.push_back(&c);
    }
  }
  std::vector<AcceptanceOutcome> outcomes(selected.size());

  const auto worker_body = [&](std::size_t idx) {
    const Criterion& c = *selected[idx];
    AcceptanceOutcome out;
    out.number = c.number;
    out.name = c.name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      auto [pass, detail] = c.fn(out_dir);
      out.pass = pass;
      out.detail = detail;
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    outcomes[idx] = std::move(out);
  };

  if (threads <= 1 || selected.size() <= 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) worker_body(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(selected.size()));
    for (unsigned t = 0; t < count; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < selected.size(); i = next.fetch_add(1)) {
          worker_body(i);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  return outcomes;
}

int report_outcomes(const std::vector<AcceptanceOutcome>& outcomes, std::ostream& os) {
  if (outcomes.empty()) {
    os << "no criteria matched the filter\n";
    return 0;
  }
  bool all_pass = true;
  for (const AcceptanceOutcome& out : outcomes) {
    char num[8];
    std::snprintf(num, sizeof(num), "%02d", out.number);
    os << "criterion " << num << ' ' << out.name << ": " << (out.pass ? "PASS" : "FAIL") << " ("
       << out.seconds << "s) " << out.detail << '\n';
    if (!out.pass) all_pass = false;
  }
  return all_pass ? 0 : 1;
}

}  // namespace ikm
