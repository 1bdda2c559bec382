#pragma once

#include <stdexcept>
#include <vector>

#include "snc/models.hpp"

namespace snc {

// Raised when no theta > 0 satisfies alpha(theta) <= min_h beta_h(theta),
// i.e. the mean arrival rate reaches or exceeds the slowest node's rate.
struct instability_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An arrival flow traversing H independent queues in series.
struct TandemScenario {
  IncrementModel arrival;
  std::vector<IncrementModel> services;

  static TandemScenario make(IncrementModel arrival, std::vector<IncrementModel> services);

  int node_count() const { return static_cast<int>(services.size()); }
  bool homogeneous_services() const;
  double min_service_mean_rate() const;

  // Parameter validity via invalid_argument; mean-rate stability via
  // instability_error.
  void validate() const;
};

// M/M/1-style tandem: Poisson(rho * mu) arrival through H Poisson(mu) servers.
TandemScenario mm1_tandem(double mu, double rho, int node_count);

}  // namespace snc
