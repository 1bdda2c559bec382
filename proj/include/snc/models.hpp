#pragma once

#include <string>

namespace snc {

enum class ModelKind { Poisson, Deterministic, Bernoulli };
enum class ProcessRole { Arrival, Service };

// Per-slot increment distribution of an arrival or service process.
// Increments are i.i.d. across slots; all amounts are work units per slot.
struct IncrementModel {
  ModelKind kind = ModelKind::Poisson;
  ProcessRole role = ProcessRole::Arrival;
  double rate = 0.0;  // Poisson, Deterministic
  double prob = 0.0;  // Bernoulli: success probability
  double size = 0.0;  // Bernoulli: work units on success

  static IncrementModel poisson(double rate, ProcessRole role);
  static IncrementModel deterministic(double rate, ProcessRole role);
  static IncrementModel bernoulli(double prob, double size, ProcessRole role);

  double mean_rate() const;

  // Throws std::invalid_argument on parameter violations.
  void validate() const;

  bool operator==(const IncrementModel&) const = default;
};

std::string to_string(ModelKind kind);

// Effective bandwidth: (1/theta) log E[exp(theta A(1))], theta > 0.
double effective_bandwidth(const IncrementModel& model, double theta);

// Effective capacity: -(1/theta) log E[exp(-theta S(1))], theta > 0.
double effective_capacity(const IncrementModel& model, double theta);

// alpha(theta) or beta(theta) for one increment model, carrying the analytic
// theta -> 0+ limit (the mean rate) so callers never evaluate at tiny theta.
class RateFunction {
 public:
  static RateFunction bandwidth(const IncrementModel& model);
  static RateFunction capacity(const IncrementModel& model);

  double operator()(double theta) const;
  double mean_rate() const { return mean_; }
  // Largest admissible theta; +inf for all supported kinds (their MGFs are entire).
  double domain_max() const { return domain_max_; }

 private:
  RateFunction(const IncrementModel& model, bool is_bandwidth);

  IncrementModel model_;
  bool is_bandwidth_;
  double mean_;
  double domain_max_;
};

}  // namespace snc
