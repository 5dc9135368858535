#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ikm/ensemble.hpp"
#include "ikm/errors.hpp"
#include "ikm/rng.hpp"

using namespace ikm;

namespace {
constexpr double kPi = 3.14159265358979323846;

PhaseState state(std::vector<double> phases) {
  return PhaseState{std::move(phases), 0.0, TailModel::Dropped, 0.0};
}
}  // namespace

TEST_CASE("diameter and extremals") {
  std::vector<double> alt(6);
  for (std::size_t i = 1; i <= alt.size(); ++i) {
    alt[i - 1] = (i % 2 == 0 ? 1.0 : -1.0) * kPi / 3.0;
  }
  CHECK(diameter(state(alt)) == doctest::Approx(2.0 * kPi / 3.0));
  CHECK(diameter(state({0.7, 0.7, 0.7})) == 0.0);
  CHECK(diameter(state({0.0, kPi / 2.0, kPi / 4.0})) == doctest::Approx(kPi / 2.0));

  auto [lo, hi] = extremals(state({0.1, -0.2, 0.3}));
  CHECK(lo == doctest::Approx(-0.2));
  CHECK(hi == doctest::Approx(0.3));
  auto [lo1, hi1] = extremals(state({0.7}));
  CHECK(lo1 == hi1);

  PhaseState frozen{{0.0, 0.5}, 0.0, TailModel::Frozen, -1.0};
  CHECK(diameter(frozen) == doctest::Approx(1.5));
}

TEST_CASE("lp norms") {
  std::vector<double> py{3.0, 4.0};
  CHECK(lp_norm(py, 2.0) == doctest::Approx(5.0));
  std::vector<double> ones{1.0, -1.0, 1.0};
  CHECK(lp_norm(ones, std::numeric_limits<double>::infinity()) == doctest::Approx(1.0));
  std::vector<double> four(4, 1.0);
  CHECK(lp_norm(four, 1.0) == doctest::Approx(4.0));

  // nonincreasing in p
  std::vector<double> x{0.3, -1.2, 0.9, 0.05, -0.4};
  double prev = lp_norm(x, 1.0);
  for (double p : {1.5, 2.0, 3.0, 7.0, std::numeric_limits<double>::infinity()}) {
    const double cur = lp_norm(x, p);
    CHECK(cur <= prev * (1.0 + 1e-14));
    prev = cur;
  }
  CHECK_THROWS_AS(lp_norm(x, 0.5), std::invalid_argument);
}

TEST_CASE("weighted sums") {
  auto half = PositiveSequence::explicit_values({0.5, 0.5});
  CHECK(weighted_sum(state({0.0, kPi}), half) == doctest::Approx(kPi / 2.0));
  CHECK(weighted_sum(state({0.0, 0.0}), half) == 0.0);
  auto mix = PositiveSequence::explicit_values({0.5, 0.25, 0.25});
  CHECK(weighted_sum(state({kPi, kPi, kPi}), mix) == doctest::Approx(kPi));

  // linearity
  CounterRng rng(5, 3);
  std::vector<double> a(8), b(8);
  for (std::size_t i = 0; i < 8; ++i) {
    a[i] = rng.uniform(i) * 2.0 - 1.0;
    b[i] = rng.uniform(100 + i) * 2.0 - 1.0;
  }
  auto kappa = PositiveSequence::geometric(0.5, 0.5);
  std::vector<double> combo(8);
  for (std::size_t i = 0; i < 8; ++i) combo[i] = 2.0 * a[i] + 3.0 * b[i];
  const double lhs = weighted_sum(state(combo), kappa);
  const double rhs = 2.0 * weighted_sum(state(a), kappa) + 3.0 * weighted_sum(state(b), kappa);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
}

TEST_CASE("gauge shifts preserve the diameter") {
  PhaseState s = state({1.0, 2.0});
  PhaseState shifted = gauge_shift(s, 1.0, 1.0);
  CHECK(shifted.phases[0] == doctest::Approx(0.0));
  CHECK(shifted.phases[1] == doctest::Approx(1.0));
  CHECK(diameter(shifted) == doctest::Approx(diameter(s)));

  PhaseState t = gauge_shift(state({0.0, kPi / 2.0}), 2.0, 0.5);
  CHECK(t.phases[0] == doctest::Approx(-1.0));
  CHECK(t.phases[1] == doctest::Approx(kPi / 2.0 - 1.0));

  CounterRng rng(11, 4);
  for (int c = 0; c < 20; ++c) {
    std::vector<double> phases(5);
    for (std::size_t i = 0; i < 5; ++i) phases[i] = rng.uniform(c * 8 + i) * 6.0 - 3.0;
    PhaseState base = state(phases);
    const double nu = rng.uniform(c * 8 + 6) * 4.0 - 2.0;
    const double tt = rng.uniform(c * 8 + 7) * 10.0;
    CHECK(diameter(gauge_shift(base, nu, tt)) == doctest::Approx(diameter(base)));
  }
}

TEST_CASE("frequency vectors") {
  auto hom = FrequencyVector::homogeneous(1.5);
  CHECK(hom.at(1) == 1.5);
  CHECK(hom.at(999) == 1.5);
  CHECK(hom.diameter(50) == 0.0);
  CHECK(hom.inf_norm(10) == doctest::Approx(1.5));

  auto per = FrequencyVector::per_index({0.1, -0.3, 0.2});
  CHECK(per.at(2) == doctest::Approx(-0.3));
  CHECK(per.diameter(3) == doctest::Approx(0.5));
  CHECK(per.inf_norm(3) == doctest::Approx(0.3));
  CHECK(per.lp(2.0, 3) == doctest::Approx(std::sqrt(0.01 + 0.09 + 0.04)));
  CHECK_THROWS_AS(per.at(4), DimensionMismatch);
  CHECK_THROWS_AS(FrequencyVector::per_index({0.1, std::nan("")}), std::invalid_argument);
}

TEST_CASE("frequency states") {
  FrequencyState w{{0.4, -0.1, 0.25}, 0.0};
  CHECK(frequency_diameter(w) == doctest::Approx(0.5));
  CHECK_THROWS_AS(frequency_diameter(FrequencyState{}), std::invalid_argument);
}
