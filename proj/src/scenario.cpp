#include "snc/scenario.hpp"

#include <algorithm>
#include <limits>

namespace snc {

TandemScenario TandemScenario::make(IncrementModel arrival, std::vector<IncrementModel> services) {
  arrival.role = ProcessRole::Arrival;
  for (auto& s : services) s.role = ProcessRole::Service;
  TandemScenario sc{std::move(arrival), std::move(services)};
  sc.validate();
  return sc;
}

bool TandemScenario::homogeneous_services() const {
  return std::all_of(services.begin(), services.end(),
                     [&](const IncrementModel& s) { return s == services.front(); });
}

double TandemScenario::min_service_mean_rate() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& s : services) m = std::min(m, s.mean_rate());
  return m;
}

void TandemScenario::validate() const {
  arrival.validate();
  if (arrival.role != ProcessRole::Arrival)
    throw std::invalid_argument("scenario: arrival model must have the arrival role");
  if (services.empty()) throw std::invalid_argument("scenario: at least one service node required");
  for (const auto& s : services) {
    s.validate();
    if (s.role != ProcessRole::Service)
      throw std::invalid_argument("scenario: service models must have the service role");
  }
  if (!(arrival.mean_rate() < min_service_mean_rate()))
    throw instability_error("scenario unstable: mean arrival rate must be below every service rate");
}

TandemScenario mm1_tandem(double mu, double rho, int node_count) {
  if (!(rho > 0.0 && rho < 1.0)) throw std::domain_error("mm1_tandem: rho must lie in (0, 1)");
  if (!(mu > 0.0)) throw std::domain_error("mm1_tandem: mu must be positive");
  if (node_count < 1) throw std::domain_error("mm1_tandem: node count must be >= 1");
  std::vector<IncrementModel> services(
      static_cast<std::size_t>(node_count),
      IncrementModel::poisson(mu, ProcessRole::Service));
  return TandemScenario::make(IncrementModel::poisson(rho * mu, ProcessRole::Arrival),
                              std::move(services));
}

}  // namespace snc
