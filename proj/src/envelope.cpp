#include "snc/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace snc {

double EnvelopeSpec::envelope(double t) const { return rate * t; }

double EnvelopeSpec::error_fn(double sigma) const { return std::exp(-theta * sigma); }

void EnvelopeSpec::validate() const {
  if (!(rate >= 0.0)) throw std::invalid_argument("envelope: rate must be non-negative");
  if (!(theta > 0.0)) throw std::invalid_argument("envelope: theta must be positive");
}

void TraceSample::validate() const {
  for (double x : increments)
    if (!(x >= 0.0)) throw std::invalid_argument("trace: increments must be non-negative");
}

double empirical_effective_bandwidth(const TraceSample& trace, double theta) {
  if (!(theta > 0.0)) throw std::domain_error("empirical effective bandwidth: theta must be positive");
  if (trace.increments.empty())
    throw std::domain_error("empirical effective bandwidth: empty trace");
  trace.validate();

  const double x_max = *std::max_element(trace.increments.begin(), trace.increments.end());
  const double shift = theta * x_max;
  double sum = 0.0;
  for (double x : trace.increments) sum += std::exp(theta * x - shift);
  const double n = static_cast<double>(trace.increments.size());
  return (shift + std::log(sum / n)) / theta;
}

std::vector<double> min_plus_convolve(const std::vector<double>& f, const std::vector<double>& g) {
  if (f.size() != g.size())
    throw std::domain_error("min-plus convolution: slot grids must match");
  if (f.empty()) return {};
  if (f.front() != 0.0 || g.front() != 0.0)
    throw std::domain_error("min-plus convolution: f(0) and g(0) must be 0");

  const std::size_t n = f.size();
  std::vector<double> h(n, std::numeric_limits<double>::infinity());
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t u = 0; u <= t; ++u) h[t] = std::min(h[t], f[u] + g[t - u]);
  return h;
}

ViolationEstimate envelope_violation_rate(const std::vector<TraceSample>& traces,
                                          const EnvelopeSpec& spec, double sigma,
                                          std::int64_t t) {
  spec.validate();
  if (t < 1) throw std::domain_error("envelope violation rate: t must be >= 1");

  std::int64_t exceed = 0;
  for (const auto& trace : traces) {
    if (trace.slot_count() < t)
      throw std::domain_error("envelope violation rate: trace shorter than t");
    const double cum = std::accumulate(trace.increments.begin(),
                                       trace.increments.begin() + t, 0.0);
    if (cum > spec.envelope(static_cast<double>(t)) + sigma) ++exceed;
  }

  ViolationEstimate out;
  out.n_samples = static_cast<std::int64_t>(traces.size());
  if (out.n_samples == 0) return out;
  const double n = static_cast<double>(out.n_samples);
  out.estimate = static_cast<double>(exceed) / n;
  out.half_width_95 = 1.96 * std::sqrt(out.estimate * (1.0 - out.estimate) / n);
  return out;
}

}  // namespace snc
