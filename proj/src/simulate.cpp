#include "snc/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "snc/bounds.hpp"
#include "snc/rng.hpp"

namespace snc {

void SimConfig::validate() const {
  scenario.validate();
  if (horizon < 1) throw std::invalid_argument("sim config: horizon must be >= 1");
  if (replications < 1) throw std::invalid_argument("sim config: replications must be >= 1");
  const std::int64_t w = effective_warmup();
  if (!(horizon > w && w >= 0)) throw std::invalid_argument("sim config: need horizon > warmup >= 0");
  if (threads < 1) throw std::invalid_argument("sim config: threads must be >= 1");
  if (grid_points < 2) throw std::invalid_argument("sim config: grid_points must be >= 2");
}

namespace {

// Smallest v with bound(v) <= target, by doubling then bisection.
double bound_crossing(const std::function<double(double)>& bound, double target) {
  double hi = 1.0;
  int guard = 0;
  while (bound(hi) > target && guard++ < 60) hi *= 2.0;
  double lo = 0.0;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (bound(mid) > target)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

std::vector<double> grid_from_bound(const std::function<double(double)>& bound,
                                    std::int64_t n_samples, int grid_points, bool integer_grid) {
  const double target = 1.0 / static_cast<double>(std::max<std::int64_t>(n_samples, 2));
  const double hi = bound_crossing(bound, target);
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(grid_points));
  for (int i = 0; i < grid_points; ++i) {
    double v = hi * static_cast<double>(i) / static_cast<double>(grid_points - 1);
    if (integer_grid) v = std::floor(v);
    if (grid.empty() || v > grid.back()) grid.push_back(v);
  }
  if (grid.empty()) grid.push_back(0.0);
  return grid;
}

}  // namespace

std::vector<double> default_delay_grid(const TandemScenario& scenario, std::int64_t n_samples,
                                       int grid_points) {
  return grid_from_bound([&](double d) { return delay_bound(scenario, d).value; }, n_samples,
                         grid_points, /*integer_grid=*/true);
}

std::vector<double> default_backlog_grid(const TandemScenario& scenario, std::int64_t n_samples,
                                         int grid_points) {
  return grid_from_bound([&](double x) { return backlog_bound(scenario, x).value; }, n_samples,
                         grid_points, /*integer_grid=*/false);
}

namespace {

struct ExceedCounts {
  std::vector<std::int64_t> delay;
  std::vector<std::int64_t> backlog;

  explicit ExceedCounts(std::size_t nd, std::size_t nb) : delay(nd, 0), backlog(nb, 0) {}

  void add(const ExceedCounts& other) {
    for (std::size_t i = 0; i < delay.size(); ++i) delay[i] += other.delay[i];
    for (std::size_t i = 0; i < backlog.size(); ++i) backlog[i] += other.backlog[i];
  }
};

class ReplicationWorker {
 public:
  ReplicationWorker(const SimConfig& config, const std::vector<double>& delay_grid,
                    const std::vector<double>& backlog_grid)
      : config_(config),
        delay_grid_(delay_grid),
        backlog_grid_(backlog_grid),
        counts_(delay_grid.size(), backlog_grid.size()),
        cum_arrivals_(static_cast<std::size_t>(config.horizon) + 1, 0.0),
        cum_departures_(static_cast<std::size_t>(config.horizon) + 1, 0.0) {}

  void run(std::uint64_t replication, std::vector<SlotTraceRow>* trace) {
    const auto& sc = config_.scenario;
    const std::size_t node_count = sc.services.size();
    CounterRng rng = CounterRng::substream(config_.seed, replication);

    std::vector<double> backlog(node_count, 0.0);
    const std::int64_t horizon = config_.horizon;
    const std::int64_t warmup = config_.effective_warmup();
    std::int64_t served_ptr = 0;  // largest s with cum_arrivals[s] <= cum_departures[t]

    for (std::int64_t t = 1; t <= horizon; ++t) {
      double in = sample_increment(sc.arrival, rng);
      cum_arrivals_[t] = cum_arrivals_[t - 1] + in;
      for (std::size_t h = 0; h < node_count; ++h) {
        const double capacity = sample_increment(sc.services[h], rng);
        const double available = backlog[h] + in;
        const double departed = std::min(available, capacity);
        backlog[h] = available - departed;
        in = departed;
      }
      cum_departures_[t] = cum_departures_[t - 1] + in;

      while (served_ptr + 1 <= t && cum_arrivals_[served_ptr + 1] <= cum_departures_[t])
        ++served_ptr;
      const double delay = static_cast<double>(t - served_ptr);
      const double total_backlog = cum_arrivals_[t] - cum_departures_[t];

      if (t > warmup) {
        for (std::size_t i = 0; i < delay_grid_.size(); ++i)
          if (delay > delay_grid_[i]) ++counts_.delay[i];
        for (std::size_t i = 0; i < backlog_grid_.size(); ++i)
          if (total_backlog > backlog_grid_[i]) ++counts_.backlog[i];
      }
      if (trace)
        trace->push_back({t, backlog, cum_arrivals_[t], cum_departures_[t]});
    }
  }

  const ExceedCounts& counts() const { return counts_; }

 private:
  const SimConfig& config_;
  const std::vector<double>& delay_grid_;
  const std::vector<double>& backlog_grid_;
  ExceedCounts counts_;
  std::vector<double> cum_arrivals_;
  std::vector<double> cum_departures_;
};

EmpiricalCcdf build_ccdf(const std::vector<double>& grid, const std::vector<std::int64_t>& exceed,
                         std::int64_t n_samples) {
  EmpiricalCcdf out;
  out.points.reserve(grid.size());
  double prev = 1.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CcdfPoint p;
    p.threshold = grid[i];
    p.n_samples = n_samples;
    p.n_exceed = exceed[i];
    p.estimate = static_cast<double>(exceed[i]) / static_cast<double>(n_samples);
    // exceedance counts over a common sample set are monotone already; the
    // min is an isotonic guard against any future grid reordering
    p.estimate = std::min(p.estimate, prev);
    prev = p.estimate;
    p.half_width_95 = 1.96 * std::sqrt(p.estimate * (1.0 - p.estimate) /
                                       static_cast<double>(n_samples));
    out.points.push_back(p);
  }
  return out;
}

}  // namespace

SimResult simulate_tandem(const SimConfig& config) {
  config.validate();

  const std::int64_t measured = config.horizon - config.effective_warmup();
  const std::int64_t n_samples = measured * config.replications;
  const std::vector<double> delay_grid =
      config.delay_thresholds.empty()
          ? default_delay_grid(config.scenario, n_samples, config.grid_points)
          : config.delay_thresholds;
  const std::vector<double> backlog_grid =
      config.backlog_thresholds.empty()
          ? default_backlog_grid(config.scenario, n_samples, config.grid_points)
          : config.backlog_thresholds;
  if (!std::is_sorted(delay_grid.begin(), delay_grid.end()) ||
      !std::is_sorted(backlog_grid.begin(), backlog_grid.end()))
    throw std::invalid_argument("simulate: threshold grids must be sorted");

  SimResult result;
  const int threads = static_cast<int>(
      std::min<std::int64_t>(config.threads, config.replications));
  ExceedCounts totals(delay_grid.size(), backlog_grid.size());

  if (threads <= 1) {
    ReplicationWorker worker(config, delay_grid, backlog_grid);
    for (std::int64_t r = 0; r < config.replications; ++r)
      worker.run(static_cast<std::uint64_t>(r),
                 config.capture_trace && r == 0 ? &result.trace : nullptr);
    totals.add(worker.counts());
  } else {
    std::vector<ExceedCounts> partial(static_cast<std::size_t>(threads),
                                      ExceedCounts(delay_grid.size(), backlog_grid.size()));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        ReplicationWorker worker(config, delay_grid, backlog_grid);
        for (std::int64_t r = w; r < config.replications; r += threads)
          worker.run(static_cast<std::uint64_t>(r),
                     config.capture_trace && r == 0 ? &result.trace : nullptr);
        partial[static_cast<std::size_t>(w)] = worker.counts();
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& p : partial) totals.add(p);
  }

  result.delay = build_ccdf(delay_grid, totals.delay, n_samples);
  result.backlog = build_ccdf(backlog_grid, totals.backlog, n_samples);
  return result;
}

}  // namespace snc
