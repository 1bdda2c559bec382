#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "snc/scenario.hpp"

namespace snc {

// The four processes shown to be demisubmartingales for theta in (0, theta*]:
//   X(t) = exp(theta (A(t) - alpha(theta) t))
//   Y(t) = exp(-theta (S(t) - beta(theta) t))
//   Z(t) = exp(-theta* (S(t) - A(t)))           (theta = theta* exactly)
//   Ystar(t) = sup_{0 <= u <= t} Y(u)
// A is the scenario arrival, S the first node's service process.
enum class DemiProcess { X, Y, Z, Ystar };

std::string to_string(DemiProcess process);

struct DemiRow {
  std::string test_fn;
  std::int64_t lag = 0;       // j: tests E[(S_{j+1} - S_j) f(S_1..S_j)] >= 0
  double estimate = 0.0;
  double std_error = 0.0;
  bool pass = false;          // estimate >= -3 std_error
};

struct DemiTestReport {
  DemiProcess process = DemiProcess::X;
  double theta = 0.0;
  std::int64_t horizon = 0;
  std::int64_t replications = 0;
  std::vector<DemiRow> rows;
  bool all_pass = false;
};

// Monte-Carlo check of the demisubmartingale defect E[(S_{j+1}-S_j) f(...)]
// for the fixed family f = 1, min(S_j, c), min(max_i S_i, c) with caps
// c in {0.5, 1, 2, 5}. Empty lags selects {1, 2, 5, 10, 25, horizon-1}.
DemiTestReport check_demisubmartingale(DemiProcess process, const TandemScenario& scenario,
                                       double theta, std::int64_t horizon,
                                       std::int64_t replications, std::uint64_t seed,
                                       std::vector<std::int64_t> lags = {});

struct DoobRow {
  double sigma = 0.0;
  double estimate = 0.0;   // P{sup proc > exp(theta sigma)}
  double std_error = 0.0;
  double rhs = 0.0;        // exp(-theta sigma); exp(1 - theta sigma) for Ystar
  bool pass = false;       // estimate <= rhs + 3 std_error
};

struct DoobReport {
  DemiProcess process = DemiProcess::X;
  double theta = 0.0;
  std::int64_t horizon = 0;
  std::int64_t replications = 0;
  std::vector<DoobRow> rows;
  bool all_pass = false;
};

// Monte-Carlo check of the maximal inequalities. For X, Y, Z the statistic
// is the running supremum anchored at 0; for Ystar it is the two-parameter
// supremum over all windows 0 <= v <= u <= t, against the Rao bound
// e exp(-theta sigma).
DoobReport check_doob(DemiProcess process, const TandemScenario& scenario, double theta,
                      const std::vector<double>& sigma_grid, std::int64_t horizon,
                      std::int64_t replications, std::uint64_t seed);

// theta* of the (arrival, first service) pair, the Lemma's single-node rate.
double single_node_theta_star(const TandemScenario& scenario);

}  // namespace snc
