#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ikm/ensemble.hpp"
#include "ikm/errors.hpp"
#include "ikm/sequence.hpp"
#include "ikm/topology.hpp"

using namespace ikm;

namespace {
constexpr double kPi = 3.14159265358979323846;

// brute-force row sum over the first `terms` columns
double brute_row_sum(const CouplingMatrix& k, std::size_t i, std::size_t terms) {
  double acc = 0.0;
  for (std::size_t j = terms; j >= 1; --j) acc += k.entry(i, j);
  return acc;
}
}  // namespace

TEST_CASE("positive sequences: sums, tails, p-sums") {
  auto geo = PositiveSequence::geometric(0.5, 0.5);  // a_i = 2^-i
  CHECK(geo.term(1) == doctest::Approx(0.5));
  CHECK(geo.term(5) == doctest::Approx(0.03125));
  CHECK(geo.sum() == doctest::Approx(1.0));
  CHECK(geo.tail(3) == doctest::Approx(0.125));
  CHECK(geo.max_term() == doctest::Approx(0.5));
  CHECK(geo.p_sum(2.0) == doctest::Approx(0.25 / (1.0 - 0.25)));

  auto pw = PositiveSequence::power_law(2.0, 1.0);
  CHECK(pw.sum() == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-10));
  CHECK(pw.tail(10) < pw.tail(5));
  CHECK(pw.tail(1000) > 0.0);

  auto ex = PositiveSequence::explicit_values({0.5, 0.25, 0.25});
  CHECK(ex.sum() == doctest::Approx(1.0));
  CHECK(ex.term(4) == 0.0);
  CHECK(ex.tail(1) == doctest::Approx(0.5));

  CHECK_THROWS_AS(PositiveSequence::geometric(1.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(PositiveSequence::power_law(0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(PositiveSequence::explicit_values({1.0, -1.0}), std::invalid_argument);
}

TEST_CASE("entries per family") {
  auto gc = CouplingMatrix::geometric_cross(3.0);
  CHECK(gc.entry(1, 1) == doctest::Approx(1.0 / 9.0));
  CHECK(gc.entry(2, 3) == doctest::Approx(std::pow(3.0, -5.0)));

  auto fe = CouplingMatrix::finite_embedded({{0.0, 1.0}, {1.0, 0.0}});
  CHECK(fe.entry(3, 1) == 0.0);
  CHECK(fe.entry(1, 2) == 1.0);

  auto ps = CouplingMatrix::product_summable(PositiveSequence::geometric(0.5, 0.5));
  CHECK(ps.entry(2, 3) == doctest::Approx(0.03125));

  auto sd = CouplingMatrix::sender(PositiveSequence::geometric(0.5, 0.5), true);
  CHECK(sd.entry(7, 2) == doctest::Approx(0.25));
  CHECK(sd.entry(1, 2) == sd.entry(9, 2));

  CHECK_THROWS_AS(gc.entry(0, 1), std::invalid_argument);
}

TEST_CASE("row sums against brute-force oracles") {
  auto gc = CouplingMatrix::geometric_cross(3.0);
  CHECK(gc.row_sum(1) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(gc.row_sum(1) == doctest::Approx(brute_row_sum(gc, 1, 60)).epsilon(1e-14));
  CHECK(gc.row_sum(4) == doctest::Approx(brute_row_sum(gc, 4, 60)).epsilon(1e-14));

  auto sd = CouplingMatrix::sender(PositiveSequence::geometric(0.5, 0.5), true);
  for (std::size_t i : {1u, 2u, 17u}) CHECK(sd.row_sum(i) == doctest::Approx(1.0));

  auto uf = CouplingMatrix::uniform_finite(4, 2.0);
  CHECK(uf.row_sum(2) == doctest::Approx(2.0));
  CHECK(uf.row_sum(5) == 0.0);

  auto ps = CouplingMatrix::product_summable(PositiveSequence::geometric(0.5, 0.5));
  CHECK(ps.row_sum(3) == doctest::Approx(brute_row_sum(ps, 3, 200)).epsilon(1e-12));
}

TEST_CASE("sup and inf row-sum norms") {
  auto gc = CouplingMatrix::geometric_cross(3.0);
  CHECK(gc.norm_inf_one() == doctest::Approx(1.0 / 6.0));

  auto sd = CouplingMatrix::sender(PositiveSequence::geometric(0.5, 0.5), true);
  CHECK(sd.norm_inf_one() == doctest::Approx(1.0));
  auto sd_inf = sd.norm_minus_inf_one();
  CHECK(sd_inf.value == doctest::Approx(1.0));
  CHECK_FALSE(sd_inf.fails_in_limit);

  auto fe = CouplingMatrix::finite_embedded({{0.0, 1.0}, {1.0, 0.0}});
  CHECK(fe.norm_inf_one() == doctest::Approx(1.0));

  auto ps = CouplingMatrix::product_summable(PositiveSequence::geometric(0.5, 0.5));
  auto ps_inf = ps.norm_minus_inf_one();
  CHECK(ps_inf.value == 0.0);
  CHECK(ps_inf.fails_in_limit);

  auto uf = CouplingMatrix::uniform_finite(4, 2.0);
  CHECK(uf.norm_minus_inf_one().value == doctest::Approx(2.0));
}

TEST_CASE("p-norms of the row-sum sequence") {
  auto gc = CouplingMatrix::geometric_cross(3.0);
  double brute = 0.0;
  for (std::size_t i = 60; i >= 1; --i) brute += gc.row_sum(i);
  CHECK(gc.norm_p_one(1.0) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(gc.norm_p_one(1.0) == doctest::Approx(brute).epsilon(1e-14));

  auto fe = CouplingMatrix::finite_embedded({{0.0, 1.0}, {1.0, 0.0}});
  CHECK(fe.norm_p_one(2.0) == doctest::Approx(std::sqrt(2.0)));

  const double inf = std::numeric_limits<double>::infinity();
  for (const auto& k : {gc, fe}) {
    CHECK(k.norm_p_one(inf) == doctest::Approx(k.norm_inf_one()));
  }
  auto sd = CouplingMatrix::sender(PositiveSequence::geometric(0.5, 0.5), true);
  CHECK(std::isinf(sd.norm_p_one(2.0)));
  CHECK(sd.norm_p_one(inf) == doctest::Approx(1.0));
}

TEST_CASE("norm nesting across p") {
  const auto families = {
      CouplingMatrix::geometric_cross(3.0),
      CouplingMatrix::product_summable(PositiveSequence::geometric(0.5, 0.5)),
      CouplingMatrix::finite_embedded({{0.0, 1.0}, {1.0, 0.0}}),
      CouplingMatrix::uniform_finite(4, 2.0)};
  for (const auto& k : families) {
    const double n1 = k.norm_p_one(1.0);
    const double n2 = k.norm_p_one(2.0);
    const double ninf = k.norm_inf_one();
    CHECK(ninf <= n2 * (1.0 + 1e-14));
    CHECK(n2 <= n1 * (1.0 + 1e-14));
  }
}

TEST_CASE("truncation tail bounds") {
  auto gc = CouplingMatrix::geometric_cross(3.0);
  CHECK(gc.tail_bound(10) == doctest::Approx(std::pow(3.0, -11.0) / 2.0).epsilon(1e-14));
  double brute = 0.0;
  for (std::size_t j = 80; j >= 11; --j) brute += gc.entry(1, j);
  CHECK(gc.tail_bound(10) == doctest::Approx(brute).epsilon(1e-12));

  auto sd = CouplingMatrix::sender(PositiveSequence::geometric(0.5, 0.5), true);
  CHECK(sd.tail_bound(20) == doctest::Approx(std::pow(2.0, -20.0)).epsilon(1e-12));

  auto fe = CouplingMatrix::finite_embedded({{0.0, 1.0}, {1.0, 0.0}});
  CHECK(fe.tail_bound(2) == 0.0);

  for (const auto& k : {gc, sd}) {
    double prev = k.tail_bound(1);
    CHECK(prev <= k.norm_inf_one());
    for (std::size_t n = 2; n <= 12; ++n) {
      const double cur = k.tail_bound(n);
      CHECK(cur <= prev);
      prev = cur;
    }
  }
}

TEST_CASE("witness sequences") {
  auto ps = CouplingMatrix::product_summable(PositiveSequence::geometric(0.5, 0.5));
  auto w = ps.tilde_kappa();
  REQUIRE(w.has_value());
  CHECK(w->term(3) == doctest::Approx(std::pow(2.0, -3.0) / 2.0));
  CHECK(w->l1() == doctest::Approx(0.5));
  CHECK(w->l1() <= 1.0);

  auto sd = CouplingMatrix::sender(PositiveSequence::geometric(0.5, 0.5), true);
  auto ws = sd.tilde_kappa();
  REQUIRE(ws.has_value());
  CHECK(ws->term(2) == doctest::Approx(0.25 / (1.0 + 0x1.0p-20)));
  CHECK(ws->l1() <= 1.0);

  CHECK_FALSE(CouplingMatrix::geometric_cross(3.0).tilde_kappa().has_value());
}

TEST_CASE("row-ratio inequality holds for the product witness") {
  auto ps = CouplingMatrix::product_summable(PositiveSequence::geometric(0.5, 0.5));
  auto w = ps.tilde_kappa();
  REQUIRE(w.has_value());
  for (std::size_t i = 1; i <= 24; ++i) {
    for (std::size_t j = 1; j <= 24; ++j) {
      CHECK(ps.entry(i, j) / ps.row_sum(i) > w->term(j));
    }
  }
}

TEST_CASE("framework validation") {
  auto ps = CouplingMatrix::product_summable(PositiveSequence::geometric(0.5, 0.5));
  PhaseState quarter{{kPi / 4.0, -kPi / 4.0, kPi / 4.0, -kPi / 4.0}, 0.0, TailModel::Dropped, 0.0};
  auto nu = FrequencyVector::homogeneous(0.0);
  FrameworkReport rep = validate_framework(ps, quarter, nu, 128);
  CHECK(rep.f1_holds);
  CHECK(rep.initial_diameter == doctest::Approx(kPi / 2.0));
  CHECK(rep.f2_holds);
  CHECK_FALSE(rep.f3_holds);

  auto sd = CouplingMatrix::sender(PositiveSequence::geometric(0.5, 0.5), true);
  PhaseState narrow{{0.1, 0.4, -0.2}, 0.0, TailModel::Dropped, 0.0};
  FrameworkReport rep2 = validate_framework(sd, narrow, nu, 128);
  CHECK(rep2.f3_holds);
  CHECK(rep2.norm_minus_inf_one == doctest::Approx(1.0));

  PhaseState boundary{{0.0, kPi}, 0.0, TailModel::Dropped, 0.0};
  FrameworkReport rep3 = validate_framework(sd, boundary, nu, 128);
  CHECK_FALSE(rep3.f1_holds);
}

TEST_CASE("symmetry and nonnegativity") {
  const auto symmetric = {
      CouplingMatrix::geometric_cross(3.0),
      CouplingMatrix::product_summable(PositiveSequence::geometric(0.5, 0.5)),
      CouplingMatrix::uniform_finite(3, 1.5),
      CouplingMatrix::finite_embedded({{0.0, 2.0}, {2.0, 0.5}})};
  for (const auto& k : symmetric) {
    CHECK(k.symmetric());
    for (std::size_t i = 1; i <= 8; ++i) {
      for (std::size_t j = 1; j <= 8; ++j) {
        CHECK(k.entry(i, j) >= 0.0);
        CHECK(k.entry(i, j) == k.entry(j, i));
        CHECK(k.row_sum(i) <= k.norm_inf_one() * (1.0 + 1e-15));
      }
    }
  }
  auto sd = CouplingMatrix::sender(PositiveSequence::explicit_values({0.7, 0.3}), false);
  CHECK_FALSE(sd.symmetric());
  CHECK_THROWS_AS(sd.product_sequence(), WrongFamily);
  auto gc = CouplingMatrix::geometric_cross(3.0);
  CHECK_THROWS_AS(gc.sender_weights(), WrongFamily);

  CHECK_THROWS_AS(CouplingMatrix::finite_embedded({{0.0, -1.0}, {1.0, 0.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(CouplingMatrix::geometric_cross(0.9), std::invalid_argument);
}
