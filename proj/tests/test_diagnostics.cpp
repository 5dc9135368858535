#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ikm/diagnostics.hpp"
#include "ikm/errors.hpp"
#include "ikm/rng.hpp"
#include "ikm/scenario.hpp"

using namespace ikm;

namespace {
constexpr double kPi = 3.14159265358979323846;

PhaseState state(std::vector<double> phases) {
  return PhaseState{std::move(phases), 0.0, TailModel::Dropped, 0.0};
}

Scenario sender_scenario(std::vector<double> weights, std::vector<double> phases, double step,
                         double t_end, bool normalized = false) {
  Scenario sc;
  sc.name = "test";
  sc.truncation_n = phases.size();
  sc.topology = CouplingMatrix::sender(PositiveSequence::explicit_values(std::move(weights)),
                                       normalized);
  sc.initial_phases = std::move(phases);
  sc.frequencies = FrequencyVector::homogeneous(0.0);
  sc.integrator.step = step;
  sc.integrator.t_end = t_end;
  return sc;
}
}  // namespace

TEST_CASE("order parameters") {
  auto half = PositiveSequence::explicit_values({0.5, 0.5});

  OrderParameters sync = order_parameters(state({0.8, 0.8}), half);
  CHECK(sync.r == doctest::Approx(1.0));
  REQUIRE(sync.phi.has_value());
  CHECK(*sync.phi == doctest::Approx(0.8));

  OrderParameters quarter = order_parameters(state({0.0, kPi / 2.0}), half);
  CHECK(quarter.r == doctest::Approx(std::sqrt(2.0) / 2.0));
  CHECK(*quarter.phi == doctest::Approx(kPi / 4.0));

  OrderParameters anti = order_parameters(state({0.0, kPi}), half);
  CHECK(anti.r < 1e-9);
  CHECK_FALSE(anti.phi.has_value());

  auto solo = PositiveSequence::explicit_values({0.35});
  OrderParameters one = order_parameters(state({1.2}), solo);
  CHECK(one.r == doctest::Approx(0.35));
}

TEST_CASE("potential values") {
  auto fe = CouplingMatrix::finite_embedded({{0.0, 1.0}, {1.0, 0.0}});
  CHECK(potential(state({0.4, 0.4}), fe) == doctest::Approx(0.0));
  CHECK(potential(state({0.0, kPi}), fe) == doctest::Approx(2.0));

  // parity-split value for the dyadic product family: 2*(2/3)*(1/3)
  auto ps = CouplingMatrix::product_summable(PositiveSequence::geometric(0.5, 0.5));
  std::vector<double> alt(40);
  for (std::size_t i = 1; i <= 40; ++i) alt[i - 1] = (i % 2 == 0 ? 1.0 : -1.0) * kPi / 2.0;
  CHECK(potential(state(alt), ps) == doctest::Approx(4.0 / 9.0).epsilon(1e-9));

  auto sd = CouplingMatrix::sender(PositiveSequence::explicit_values({0.7, 0.3}), false);
  CHECK_THROWS_AS(potential(state({0.0, 1.0}), sd), WrongFamily);
}

TEST_CASE("lyapunov identity along a run") {
  Scenario sc;
  sc.name = "lyap";
  sc.topology = CouplingMatrix::finite_embedded({{0.0, 1.0}, {1.0, 0.0}});
  sc.truncation_n = 2;
  sc.initial_phases = {0.0, kPi / 2.0};
  sc.frequencies = FrequencyVector::homogeneous(0.0);
  sc.integrator.step = 0.01;
  sc.integrator.t_end = 10.0;
  sc.diagnostics.potential = true;
  Trajectory traj = integrate(sc);

  // hand values at t=0: rhs = (1,-1), dP/dt = -2
  CHECK(traj.records.front().rhs_l2 == doctest::Approx(std::sqrt(2.0)));
  CHECK(lyapunov_identity_check(traj, sc.topology).passed());

  Trajectory tiny;
  tiny.records = {traj.records[0]};
  CHECK_THROWS_AS(lyapunov_identity_check(tiny, sc.topology), std::invalid_argument);
}

TEST_CASE("gradient against finite differences") {
  auto fe = CouplingMatrix::finite_embedded({{0.0, 1.0}, {1.0, 0.0}});
  CHECK(gradient_check(state({0.9, 0.9}), fe, 0x1.0p-12).passed());
  CHECK(gradient_check(state({0.0, kPi / 2.0}), fe, 0x1.0p-12, 1, 50).passed());

  auto ps = CouplingMatrix::product_summable(PositiveSequence::geometric(0.5, 0.5));
  CounterRng rng(17, 9);
  for (std::uint64_t c = 0; c < 20; ++c) {
    std::vector<double> phases(10);
    for (std::size_t i = 0; i < 10; ++i) phases[i] = rng.uniform(c * 10 + i) * 4.0 - 2.0;
    CHECK(gradient_check(state(phases), ps, 0x1.0p-12, c, 10).passed());
  }

  CHECK_THROWS_AS(gradient_check(state({0.0, 1.0}), fe, 0.5), std::invalid_argument);
}

TEST_CASE("cross ratios") {
  PhaseState quad = state({0.0, kPi / 2.0, kPi, 1.5 * kPi});
  auto c = cross_ratio(quad, 1, 2, 3, 4);
  CHECK(c.real() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(c.imag() == doctest::Approx(0.0));

  PhaseState rotated = quad;
  for (double& p : rotated.phases) p += 0.37;
  auto cr = cross_ratio(rotated, 1, 2, 3, 4);
  CHECK(std::abs(cr - c) < 1e-12);

  PhaseState close = state({0.0, 0.1, 0.2, 0.1 + 0x1.0p-30});
  CHECK_THROWS_AS(cross_ratio(close, 1, 2, 3, 4), DegenerateTuple);
  CHECK_THROWS_AS(cross_ratio(quad, 1, 2, 3, 3), DegenerateTuple);
  CHECK_THROWS_AS(cross_ratio(quad, 1, 2, 3, 9), std::invalid_argument);
}

TEST_CASE("cross-ratio constancy over a sender run") {
  Scenario sc = sender_scenario({0.4, 0.3, 0.2, 0.1}, {-0.9, -0.3, 0.4, 1.1}, 0.01, 5.0);
  Trajectory traj = integrate(sc);
  CheckResult res = cross_ratio_constancy_check(traj, {{1, 2, 3, 4}});
  CHECK(res.status != CheckStatus::Fail);
  CHECK(res.worst < 0.0);
}

TEST_CASE("order-parameter monotonicity") {
  Scenario sc = sender_scenario({0.4, 0.3, 0.2, 0.1}, {-0.9, -0.3, 0.4, 1.1}, 0.05, 80.0);
  Trajectory traj = integrate(sc);
  CHECK(r_monotonicity_check(traj, sc.topology).passed());

  Scenario anti = sender_scenario({0.5, 0.5}, {0.0, kPi}, 0.05, 10.0);
  Trajectory anti_traj = integrate(anti);
  CHECK(r_monotonicity_check(anti_traj, anti.topology).passed());
}

TEST_CASE("asymptotic classification") {
  auto half = PositiveSequence::explicit_values({0.5, 0.5});
  AsymptoticClass full = classify_asymptotic(state({0.42, 0.42}), half, 0.42, 1e-3, true);
  CHECK(full.kind == AsymptoticClass::Kind::FullSync);
  CHECK(full.theta_limit == doctest::Approx(0.42));

  // antipodal equal-weight pair: both bi-cluster readings tie, stays unresolved
  AsymptoticClass anti = classify_asymptotic(state({0.0, kPi}), half, kPi / 2.0, 1e-3, true);
  CHECK(anti.kind == AsymptoticClass::Kind::Unresolved);

  auto uneven = PositiveSequence::explicit_values({0.75, 0.25});
  const double theta0 = 0.3;
  AsymptoticClass bi = classify_asymptotic(
      state({theta0 - 0.25 * kPi, theta0 + 0.75 * kPi}), uneven, theta0, 1e-3, true);
  CHECK(bi.kind == AsymptoticClass::Kind::BiCluster);
  CHECK(bi.outlier_index == 2);
  CHECK(bi.sign == 1);

  CHECK_THROWS_AS(classify_asymptotic(state({0.0, 0.0}), half, 0.0, 1e-3, false), NotConverged);
}

TEST_CASE("practical synchronization angle") {
  CHECK(practical_sync_gamma(0.1, 1.0, 1.0) == doctest::Approx(0.1001674212).epsilon(1e-9));
  CHECK(practical_sync_gamma(1e-9, 1.0, 1.0) == doctest::Approx(1e-9).epsilon(1e-6));
  CHECK_THROWS_AS(practical_sync_gamma(1.0, 1.0, 1.0), HypothesisViolated);
  CHECK_THROWS_AS(practical_sync_gamma(0.0, 1.0, 1.0), HypothesisViolated);
  CHECK_THROWS_AS(practical_sync_gamma(0.1, -1.0, 1.0), HypothesisViolated);
}

TEST_CASE("practical synchronization tail check") {
  Scenario sc = sender_scenario({0.4, 0.3, 0.2, 0.1}, {-0.4, -0.1, 0.2, 0.5}, 0.05, 60.0);
  Trajectory traj = integrate(sc);
  CheckResult res = practical_sync_check(traj, 0.05, 0.2);
  CHECK(res.passed());

  // out-of-hypothesis initial diameter gates to NotApplicable
  Scenario wide = sender_scenario({0.5, 0.5}, {0.0, 3.3}, 0.05, 1.0);
  Trajectory wide_traj = integrate(wide);
  CHECK(practical_sync_check(wide_traj, 0.05, 0.2).status == CheckStatus::NotApplicable);
}

TEST_CASE("frequency-diameter envelope") {
  Scenario sc = sender_scenario({0.4, 0.3, 0.2, 0.1}, {-0.9, -0.3, 0.4, 1.2}, 0.05, 40.0);
  sc.second_order = true;
  Trajectory traj = integrate(sc);
  CHECK(frequency_decay_check(traj, sc.topology).passed());

  Trajectory first_order = integrate(sender_scenario({0.5, 0.5}, {0.0, 0.5}, 0.05, 1.0));
  CHECK_THROWS_AS(frequency_decay_check(first_order, sc.topology), std::invalid_argument);
}

TEST_CASE("trigonometric inequalities") {
  CHECK(trig_lemma_checks(5000, 7).passed());

  // hypothesis-respecting corner by hand
  const double e1 = 0.3, e2 = 0.3;
  const double a = 0.0, b = -e2, c = kPi - e1;
  const double lhs = std::sin(c - a) + std::sin(a - b) + std::sin(b - c);
  CHECK(lhs <= 4.0 * std::sin(e2 / 2.0));

  const double theta = 1.0, h = 0.5;
  const double lhs2 = std::abs(2.0 * std::sin(theta + h / 2.0) * std::sin(h / 2.0) -
                               h * std::sin(theta));
  CHECK(lhs2 <= h * h);
  CHECK(lhs2 == doctest::Approx(0.05375).epsilon(1e-2));
}
