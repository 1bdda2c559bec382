#include "snc/models.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace snc {

IncrementModel IncrementModel::poisson(double rate, ProcessRole role) {
  IncrementModel m{ModelKind::Poisson, role, rate, 0.0, 0.0};
  m.validate();
  return m;
}

IncrementModel IncrementModel::deterministic(double rate, ProcessRole role) {
  IncrementModel m{ModelKind::Deterministic, role, rate, 0.0, 0.0};
  m.validate();
  return m;
}

IncrementModel IncrementModel::bernoulli(double prob, double size, ProcessRole role) {
  IncrementModel m{ModelKind::Bernoulli, role, 0.0, prob, size};
  m.validate();
  return m;
}

double IncrementModel::mean_rate() const {
  switch (kind) {
    case ModelKind::Poisson:
    case ModelKind::Deterministic:
      return rate;
    case ModelKind::Bernoulli:
      return prob * size;
  }
  return 0.0;
}

void IncrementModel::validate() const {
  switch (kind) {
    case ModelKind::Poisson:
    case ModelKind::Deterministic:
      if (!(rate > 0.0) || !std::isfinite(rate))
        throw std::invalid_argument("increment model: rate must be positive and finite");
      break;
    case ModelKind::Bernoulli:
      if (!(prob >= 0.0 && prob <= 1.0))
        throw std::invalid_argument("increment model: prob must lie in [0, 1]");
      if (!(size > 0.0) || !std::isfinite(size))
        throw std::invalid_argument("increment model: size must be positive and finite");
      break;
  }
}

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Poisson: return "poisson";
    case ModelKind::Deterministic: return "deterministic";
    case ModelKind::Bernoulli: return "bernoulli";
  }
  return "?";
}

namespace {

void require_positive_theta(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta))
    throw std::domain_error("theta must be positive and finite");
}

}  // namespace

double effective_bandwidth(const IncrementModel& model, double theta) {
  require_positive_theta(theta);
  switch (model.kind) {
    case ModelKind::Poisson:
      return model.rate * std::expm1(theta) / theta;
    case ModelKind::Deterministic:
      return model.rate;
    case ModelKind::Bernoulli:
      // (1/theta) log(1 - p + p e^{theta s})
      return std::log1p(model.prob * std::expm1(theta * model.size)) / theta;
  }
  return 0.0;
}

double effective_capacity(const IncrementModel& model, double theta) {
  require_positive_theta(theta);
  switch (model.kind) {
    case ModelKind::Poisson:
      return -model.rate * std::expm1(-theta) / theta;
    case ModelKind::Deterministic:
      return model.rate;
    case ModelKind::Bernoulli:
      return -std::log1p(model.prob * std::expm1(-theta * model.size)) / theta;
  }
  return 0.0;
}

RateFunction::RateFunction(const IncrementModel& model, bool is_bandwidth)
    : model_(model),
      is_bandwidth_(is_bandwidth),
      mean_(model.mean_rate()),
      domain_max_(std::numeric_limits<double>::infinity()) {
  model.validate();
}

RateFunction RateFunction::bandwidth(const IncrementModel& model) {
  return RateFunction(model, true);
}

RateFunction RateFunction::capacity(const IncrementModel& model) {
  return RateFunction(model, false);
}

double RateFunction::operator()(double theta) const {
  return is_bandwidth_ ? effective_bandwidth(model_, theta)
                       : effective_capacity(model_, theta);
}

}  // namespace snc
