#pragma once

#include <cstdint>
#include <vector>

#include "snc/scenario.hpp"

namespace snc {

struct SimConfig {
  TandemScenario scenario;
  std::int64_t horizon = 0;        // slots per replication
  std::int64_t replications = 1;
  std::uint64_t seed = 0;
  std::int64_t warmup = -1;        // slots discarded; < 0 selects horizon / 10
  int threads = 1;
  int grid_points = 20;
  std::vector<double> delay_thresholds;    // empty: bound-driven default grid
  std::vector<double> backlog_thresholds;  // empty: bound-driven default grid
  bool capture_trace = false;              // record replication 0 slot by slot

  std::int64_t effective_warmup() const { return warmup < 0 ? horizon / 10 : warmup; }
  void validate() const;
};

struct CcdfPoint {
  double threshold = 0.0;
  double estimate = 0.0;       // P{X > threshold}
  double half_width_95 = 0.0;  // binomial 95% half-width
  std::int64_t n_samples = 0;
  std::int64_t n_exceed = 0;
};

struct EmpiricalCcdf {
  std::vector<CcdfPoint> points;
};

struct SlotTraceRow {
  std::int64_t slot = 0;
  std::vector<double> node_backlog;
  double cum_arrivals = 0.0;
  double cum_departures = 0.0;
};

struct SimResult {
  EmpiricalCcdf delay;    // end-to-end virtual delay, slots
  EmpiricalCcdf backlog;  // total network backlog, work units
  std::vector<SlotTraceRow> trace;
};

// Threshold grids spanning [0, v] where the analytic bound decays to one
// expected exceedance in n_samples observations; data independent, so CCDF
// output is byte-identical across thread counts.
std::vector<double> default_delay_grid(const TandemScenario& scenario, std::int64_t n_samples,
                                       int grid_points);
std::vector<double> default_backlog_grid(const TandemScenario& scenario, std::int64_t n_samples,
                                         int grid_points);

// Discrete-time fluid simulation of the tandem. Per slot and node: the
// arrival increment enters node 1, each node departs
// min(backlog + input, service increment) within the slot, and the
// departure feeds the next node. Draw order per slot is arrival first,
// then services upstream to downstream. Replication r uses the RNG
// substream seed XOR r; results do not depend on the thread count.
SimResult simulate_tandem(const SimConfig& config);

}  // namespace snc
