#pragma once

#include <cstdint>
#include <vector>

#include "snc/models.hpp"

namespace snc {

// Linear statistical envelope rate * t with the exponential error function
// exp(-theta * sigma) bounding the violation probability.
struct EnvelopeSpec {
  double rate = 0.0;
  double theta = 0.0;

  double envelope(double t) const;
  double error_fn(double sigma) const;
  void validate() const;
};

// One realization of per-slot increments.
struct TraceSample {
  std::vector<double> increments;

  std::int64_t slot_count() const { return static_cast<std::int64_t>(increments.size()); }
  void validate() const;  // all increments >= 0
};

// (1/theta) log( mean of exp(theta x_i) ) over the per-slot increments,
// evaluated via log-sum-exp so large theta*x does not overflow.
double empirical_effective_bandwidth(const TraceSample& trace, double theta);

// Min-plus convolution of two functions sampled on slots 0..T with
// f(0) = g(0) = 0; g is treated as time invariant, g(u..t) = g(t - u).
std::vector<double> min_plus_convolve(const std::vector<double>& f, const std::vector<double>& g);

struct ViolationEstimate {
  double estimate = 0.0;
  double half_width_95 = 0.0;
  std::int64_t n_samples = 0;
};

// Fraction of traces whose cumulative arrivals over (0, t] exceed
// envelope(t) + sigma, with a binomial 95% half-width.
ViolationEstimate envelope_violation_rate(const std::vector<TraceSample>& traces,
                                          const EnvelopeSpec& spec, double sigma,
                                          std::int64_t t);

}  // namespace snc
