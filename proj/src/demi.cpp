#include "snc/demi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "snc/bounds.hpp"
#include "snc/rng.hpp"

namespace snc {

std::string to_string(DemiProcess process) {
  switch (process) {
    case DemiProcess::X: return "X";
    case DemiProcess::Y: return "Y";
    case DemiProcess::Z: return "Z";
    case DemiProcess::Ystar: return "Ystar";
  }
  return "?";
}

double single_node_theta_star(const TandemScenario& scenario) {
  scenario.validate();
  return theta_star(RateFunction::bandwidth(scenario.arrival),
                    {RateFunction::capacity(scenario.services.front())}, 50.0, 0.0)
      .value;
}

namespace {

constexpr double kCaps[] = {0.5, 1.0, 2.0, 5.0};

double checked_theta(DemiProcess process, const TandemScenario& scenario, double theta) {
  const double ts = single_node_theta_star(scenario);
  if (process == DemiProcess::Z) {
    if (std::fabs(theta - ts) > 1e-9 * ts)
      throw std::domain_error("demi check: Z requires theta = theta* exactly");
    return ts;
  }
  if (!(theta > 0.0) || theta > ts * (1.0 + 1e-9))
    throw std::domain_error("demi check: theta must lie in (0, theta*]");
  return theta;
}

// Fills values[1..horizon] of the chosen process for one replication.
void fill_path(DemiProcess process, const TandemScenario& scenario, double theta,
               std::int64_t horizon, CounterRng& rng, std::vector<double>& values) {
  const IncrementModel& arrival = scenario.arrival;
  const IncrementModel& service = scenario.services.front();
  switch (process) {
    case DemiProcess::X: {
      const double alpha = effective_bandwidth(arrival, theta);
      double walk = 0.0;
      for (std::int64_t t = 1; t <= horizon; ++t) {
        walk += sample_increment(arrival, rng) - alpha;
        values[static_cast<std::size_t>(t)] = std::exp(theta * walk);
      }
      break;
    }
    case DemiProcess::Y:
    case DemiProcess::Ystar: {
      const double beta = effective_capacity(service, theta);
      double walk = 0.0;
      double peak = 1.0;  // Y(0) = 1
      for (std::int64_t t = 1; t <= horizon; ++t) {
        walk += beta - sample_increment(service, rng);
        const double y = std::exp(theta * walk);
        peak = std::max(peak, y);
        values[static_cast<std::size_t>(t)] = process == DemiProcess::Y ? y : peak;
      }
      break;
    }
    case DemiProcess::Z: {
      double walk = 0.0;
      for (std::int64_t t = 1; t <= horizon; ++t) {
        const double a = sample_increment(arrival, rng);
        const double s = sample_increment(service, rng);
        walk += a - s;
        values[static_cast<std::size_t>(t)] = std::exp(theta * walk);
      }
      break;
    }
  }
}

std::vector<std::int64_t> default_lags(std::int64_t horizon) {
  std::vector<std::int64_t> lags;
  for (std::int64_t j : {std::int64_t{1}, std::int64_t{2}, std::int64_t{5}, std::int64_t{10},
                         std::int64_t{25}, horizon - 1})
    if (j >= 1 && j <= horizon - 1 && (lags.empty() || j > lags.back())) lags.push_back(j);
  return lags;
}

}  // namespace

DemiTestReport check_demisubmartingale(DemiProcess process, const TandemScenario& scenario,
                                       double theta, std::int64_t horizon,
                                       std::int64_t replications, std::uint64_t seed,
                                       std::vector<std::int64_t> lags) {
  if (horizon < 2) throw std::invalid_argument("demi check: horizon must be >= 2");
  if (replications < 2) throw std::invalid_argument("demi check: replications must be >= 2");
  theta = checked_theta(process, scenario, theta);
  if (lags.empty()) lags = default_lags(horizon);
  std::sort(lags.begin(), lags.end());
  for (std::int64_t j : lags)
    if (j < 1 || j > horizon - 1) throw std::invalid_argument("demi check: lag out of range");

  // Row layout: per lag, the fixed family {1} + {min(S_j, c)} + {min(max, c)}.
  const std::size_t fns_per_lag = 1 + 2 * std::size(kCaps);
  const std::size_t n_rows = lags.size() * fns_per_lag;
  std::vector<double> sum(n_rows, 0.0);
  std::vector<double> sum_sq(n_rows, 0.0);

  std::vector<double> values(static_cast<std::size_t>(horizon) + 1, 1.0);
  std::vector<double> running_max(static_cast<std::size_t>(horizon) + 1, 1.0);
  for (std::int64_t r = 0; r < replications; ++r) {
    CounterRng rng = CounterRng::substream(seed, static_cast<std::uint64_t>(r));
    fill_path(process, scenario, theta, horizon, rng, values);
    running_max[1] = values[1];
    for (std::int64_t t = 2; t <= horizon; ++t)
      running_max[static_cast<std::size_t>(t)] =
          std::max(running_max[static_cast<std::size_t>(t - 1)], values[static_cast<std::size_t>(t)]);

    std::size_t row = 0;
    for (std::int64_t j : lags) {
      const double diff = values[static_cast<std::size_t>(j + 1)] - values[static_cast<std::size_t>(j)];
      const double last = values[static_cast<std::size_t>(j)];
      const double peak = running_max[static_cast<std::size_t>(j)];
      const auto push = [&](double f) {
        const double v = diff * f;
        sum[row] += v;
        sum_sq[row] += v * v;
        ++row;
      };
      push(1.0);
      for (double c : kCaps) push(std::min(last, c));
      for (double c : kCaps) push(std::min(peak, c));
    }
  }

  DemiTestReport report;
  report.process = process;
  report.theta = theta;
  report.horizon = horizon;
  report.replications = replications;
  report.all_pass = true;
  const double n = static_cast<double>(replications);
  std::size_t row = 0;
  for (std::int64_t j : lags) {
    const auto emit = [&](const std::string& name) {
      DemiRow out;
      out.test_fn = name;
      out.lag = j;
      out.estimate = sum[row] / n;
      const double var = std::max(0.0, (sum_sq[row] - sum[row] * sum[row] / n) / (n - 1.0));
      out.std_error = std::sqrt(var / n);
      out.pass = out.estimate >= -3.0 * out.std_error;
      report.all_pass = report.all_pass && out.pass;
      report.rows.push_back(std::move(out));
      ++row;
    };
    emit("1");
    for (double c : kCaps) emit("min(last," + std::to_string(c).substr(0, 3) + ")");
    for (double c : kCaps) emit("min(max," + std::to_string(c).substr(0, 3) + ")");
  }
  return report;
}

DoobReport check_doob(DemiProcess process, const TandemScenario& scenario, double theta,
                      const std::vector<double>& sigma_grid, std::int64_t horizon,
                      std::int64_t replications, std::uint64_t seed) {
  if (horizon < 1) throw std::invalid_argument("doob check: horizon must be >= 1");
  if (replications < 2) throw std::invalid_argument("doob check: replications must be >= 2");
  if (sigma_grid.empty()) throw std::invalid_argument("doob check: sigma grid must be non-empty");
  for (double s : sigma_grid)
    if (!(s >= 0.0)) throw std::invalid_argument("doob check: sigma must be non-negative");
  theta = checked_theta(process, scenario, theta);

  const IncrementModel& arrival = scenario.arrival;
  const IncrementModel& service = scenario.services.front();
  const double alpha = effective_bandwidth(arrival, theta);
  const double beta = effective_capacity(service, theta);

  // Exceedance statistic in the log domain: sup proc > exp(theta sigma)
  // if and only if max_stat > sigma. The supremum includes u = 0 (stat 0).
  const auto max_stat = [&](CounterRng& rng) {
    double walk = 0.0;
    double peak = 0.0;
    double trough = 0.0;   // running min of the walk, Ystar only
    double drawdown = 0.0;
    for (std::int64_t t = 1; t <= horizon; ++t) {
      switch (process) {
        case DemiProcess::X:
          walk += sample_increment(arrival, rng) - alpha;
          break;
        case DemiProcess::Y:
        case DemiProcess::Ystar:
          walk += beta - sample_increment(service, rng);
          break;
        case DemiProcess::Z: {
          const double a = sample_increment(arrival, rng);
          const double s = sample_increment(service, rng);
          walk += a - s;
          break;
        }
      }
      peak = std::max(peak, walk);
      drawdown = std::max(drawdown, walk - trough);
      trough = std::min(trough, walk);
    }
    return process == DemiProcess::Ystar ? drawdown : peak;
  };

  std::vector<std::int64_t> exceed(sigma_grid.size(), 0);
  for (std::int64_t r = 0; r < replications; ++r) {
    CounterRng rng = CounterRng::substream(seed, static_cast<std::uint64_t>(r));
    const double stat = max_stat(rng);
    for (std::size_t i = 0; i < sigma_grid.size(); ++i)
      if (stat > sigma_grid[i]) ++exceed[i];
  }

  DoobReport report;
  report.process = process;
  report.theta = theta;
  report.horizon = horizon;
  report.replications = replications;
  report.all_pass = true;
  const double n = static_cast<double>(replications);
  for (std::size_t i = 0; i < sigma_grid.size(); ++i) {
    DoobRow row;
    row.sigma = sigma_grid[i];
    row.estimate = static_cast<double>(exceed[i]) / n;
    row.std_error = std::sqrt(row.estimate * (1.0 - row.estimate) / n);
    const double log_rhs = -theta * sigma_grid[i] + (process == DemiProcess::Ystar ? 1.0 : 0.0);
    row.rhs = std::exp(log_rhs);
    row.pass = row.estimate <= row.rhs + 3.0 * row.std_error;
    report.all_pass = report.all_pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace snc
