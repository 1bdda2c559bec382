#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "snc/demi.hpp"

using namespace snc;

namespace {

const TandemScenario kMm1 = mm1_tandem(1.0, 0.7, 1);

}  // namespace

TEST_CASE("deterministic processes give exactly zero defects") {
  const auto sc = TandemScenario::make(
      IncrementModel::deterministic(0.5, ProcessRole::Arrival),
      {IncrementModel::deterministic(1.0, ProcessRole::Service)});
  // At any feasible theta the X path is identically 1.
  const auto report = check_demisubmartingale(DemiProcess::X, sc, 2.0, 20, 50, 3);
  CHECK(report.all_pass);
  for (const auto& row : report.rows) {
    CHECK(row.estimate == 0.0);
    CHECK(row.std_error == 0.0);
    CHECK(row.pass);
  }
}

TEST_CASE("poisson service Y defects vanish within three standard errors") {
  const double ts = single_node_theta_star(kMm1);
  CHECK(ts == doctest::Approx(oracle::kThetaStarRho07).epsilon(1e-12));
  for (double theta : {ts / 2.0, ts}) {
    const auto report = check_demisubmartingale(DemiProcess::Y, kMm1, theta, 50, 20000, 1234);
    CHECK(report.all_pass);
    REQUIRE(!report.rows.empty());
    // The f = 1 rows estimate E[Y(j+1) - Y(j)] = 0 exactly.
    for (const auto& row : report.rows)
      if (row.test_fn == "1") CHECK(std::fabs(row.estimate) <= 3.0 * row.std_error);
  }
}

TEST_CASE("Z at theta* passes; elsewhere it is rejected") {
  const double ts = single_node_theta_star(kMm1);
  const auto report = check_demisubmartingale(DemiProcess::Z, kMm1, ts, 50, 20000, 99);
  CHECK(report.all_pass);
  CHECK_THROWS_AS(check_demisubmartingale(DemiProcess::Z, kMm1, ts / 2.0, 50, 1000, 1),
                  std::domain_error);
}

TEST_CASE("Ystar increments are non-negative by construction") {
  const double ts = single_node_theta_star(kMm1);
  const auto report = check_demisubmartingale(DemiProcess::Ystar, kMm1, ts, 50, 5000, 7);
  CHECK(report.all_pass);
  for (const auto& row : report.rows) CHECK(row.estimate >= 0.0);
}

TEST_CASE("theta above theta* is a precondition error") {
  const double ts = single_node_theta_star(kMm1);
  CHECK_THROWS_AS(check_demisubmartingale(DemiProcess::X, kMm1, ts * 1.5, 50, 100, 1),
                  std::domain_error);
  CHECK_THROWS_AS(check_doob(DemiProcess::X, kMm1, ts * 1.5, {1.0}, 50, 100, 1),
                  std::domain_error);
}

TEST_CASE("report shape: rows per lag and test function") {
  const auto report =
      check_demisubmartingale(DemiProcess::X, kMm1, 0.1, 50, 100, 1, {1, 5, 49});
  CHECK(report.rows.size() == 3 * 9);  // {1} + 4 caps on last + 4 caps on running max
  CHECK_THROWS_AS(check_demisubmartingale(DemiProcess::X, kMm1, 0.1, 50, 100, 1, {50}),
                  std::invalid_argument);
}

TEST_CASE("doob: vacuous sigma and empty-tail sigma both pass") {
  const double ts = single_node_theta_star(kMm1);
  const auto report = check_doob(DemiProcess::X, kMm1, ts, {0.0, 60.0}, 50, 2000, 5);
  CHECK(report.all_pass);
  CHECK(report.rows[0].rhs == 1.0);          // sigma = 0
  CHECK(report.rows[1].estimate == 0.0);     // far tail at small replication count
}

TEST_CASE("doob maximal inequalities hold at theta* on the M/M/1 scenario") {
  const double ts = single_node_theta_star(kMm1);
  for (auto process : {DemiProcess::X, DemiProcess::Y, DemiProcess::Z, DemiProcess::Ystar}) {
    const auto report = check_doob(process, kMm1, ts, {2.0, 5.0, 10.0}, 50, 20000, 321);
    CHECK(report.all_pass);
    for (const auto& row : report.rows) {
      const double expected_rhs =
          std::exp(-ts * row.sigma) * (process == DemiProcess::Ystar ? std::exp(1.0) : 1.0);
      CHECK(row.rhs == doctest::Approx(expected_rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("doob X and Y at theta below theta* (anchored suprema)") {
  const double ts = single_node_theta_star(kMm1);
  for (auto process : {DemiProcess::X, DemiProcess::Y}) {
    const auto report = check_doob(process, kMm1, ts / 2.0, {2.0, 5.0}, 200, 20000, 8181);
    CHECK(report.all_pass);
  }
}
