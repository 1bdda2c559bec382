#include "snc/rng.hpp"

#include <cmath>

namespace snc {

namespace {

double poisson_inversion(double mean, CounterRng& rng) {
  const double u = rng.next_unit();
  double p = std::exp(-mean);
  double cdf = p;
  double k = 0.0;
  while (u > cdf && k < 1000.0) {
    k += 1.0;
    p *= mean / k;
    cdf += p;
  }
  return k;
}

// Hormann (1993), transformed rejection with decomposition, for mean >= 10.
double poisson_ptrd(double mean, CounterRng& rng) {
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  const double log_mean = std::log(mean);

  for (;;) {
    const double u = rng.next_unit() - 0.5;
    double v = rng.next_unit();
    const double us = 0.5 - std::fabs(u);
    const double k = std::floor((2.0 * a / us + b) * u + mean + 0.445);
    if (us >= 0.07 && v <= v_r) return k;
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    const double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
    if (lhs <= k * log_mean - mean - std::lgamma(k + 1.0)) return k;
  }
}

}  // namespace

double sample_poisson(double mean, CounterRng& rng) {
  return mean < 10.0 ? poisson_inversion(mean, rng) : poisson_ptrd(mean, rng);
}

double sample_increment(const IncrementModel& model, CounterRng& rng) {
  switch (model.kind) {
    case ModelKind::Poisson:
      return sample_poisson(model.rate, rng);
    case ModelKind::Deterministic:
      return model.rate;
    case ModelKind::Bernoulli:
      return rng.next_unit() < model.prob ? model.size : 0.0;
  }
  return 0.0;
}

}  // namespace snc
