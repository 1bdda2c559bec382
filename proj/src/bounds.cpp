#include "snc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "snc/gamma_tail.hpp"

namespace snc {

namespace {

constexpr double kThetaLo = 1e-9;

double alpha_minus_min_beta(const RateFunction& alpha, const std::vector<RateFunction>& betas,
                            double theta) {
  double min_beta = std::numeric_limits<double>::infinity();
  for (const auto& b : betas) min_beta = std::min(min_beta, b(theta));
  return alpha(theta) - min_beta;
}

}  // namespace

ThetaStarResult theta_star(const RateFunction& alpha, const std::vector<RateFunction>& betas,
                           double theta_hi, double tol) {
  if (betas.empty()) throw std::invalid_argument("theta_star: at least one capacity function");
  if (!(theta_hi > kThetaLo)) throw std::invalid_argument("theta_star: theta_hi too small");

  const auto g = [&](double theta) { return alpha_minus_min_beta(alpha, betas, theta); };

  if (g(kThetaLo) > 0.0)
    throw instability_error("theta_star: alpha(theta) exceeds min beta(theta) everywhere");
  if (g(theta_hi) <= 0.0) return {theta_hi, true};

  // g is continuous and non-decreasing for i.i.d.-increment models, so plain
  // bisection brackets the crossing; lo stays on the feasible side.
  double lo = kThetaLo;
  double hi = theta_hi;
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket collapsed to adjacent doubles
    if (g(mid) <= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, false};
}

ThetaStarResult theta_star(const TandemScenario& scenario, double theta_hi, double tol) {
  scenario.validate();
  std::vector<RateFunction> betas;
  betas.reserve(scenario.services.size());
  for (const auto& s : scenario.services) betas.push_back(RateFunction::capacity(s));
  return theta_star(RateFunction::bandwidth(scenario.arrival), betas, theta_hi, tol);
}

std::string to_string(BoundMethod method) {
  switch (method) {
    case BoundMethod::DemiSubmartingale: return "demi";
    case BoundMethod::Eq16VariantH1: return "eq16-h1";
    case BoundMethod::ExactMM1: return "exact-mm1";
    case BoundMethod::MgfBound: return "mgf";
  }
  return "?";
}

namespace {

BoundReport clip_to_unit(BoundReport r) {
  if (r.value > 1.0) {
    r.value = 1.0;
    r.clipped = true;
  }
  return r;
}

// Theta* used inside the bound computations. The bounds advertise identities
// such as delay_bound(H=1) == exact M/M/1 tail, which need theta* resolved to
// machine precision, so run the bisection to bracket collapse here; the
// public default tolerance only applies to direct theta_star calls.
ThetaStarResult solve_theta_star(const TandemScenario& scenario) {
  return theta_star(scenario, 50.0, 0.0);
}

}  // namespace

BoundReport error_function(double x, double theta_star, int node_count) {
  if (!(x >= 0.0)) throw std::domain_error("error_function: x must be non-negative");
  if (!(theta_star > 0.0)) throw std::domain_error("error_function: theta* must be positive");
  if (node_count < 1) throw std::domain_error("error_function: node count must be >= 1");

  BoundReport r;
  r.method = BoundMethod::DemiSubmartingale;
  r.theta_star = theta_star;
  r.argument = x;
  if (node_count == 1) {
    r.value = std::exp(-theta_star * x);
    return clip_to_unit(r);
  }
  const double y = theta_star * x - static_cast<double>(node_count - 1);
  if (y < 0.0) {
    r.value = 1.0;
    r.valid = false;
    return r;
  }
  r.value = std::exp(log_gamma_q(static_cast<double>(node_count) + 1.0, y));
  return clip_to_unit(r);
}

BoundReport backlog_bound(const TandemScenario& scenario, double x) {
  const auto ts = solve_theta_star(scenario);
  return error_function(x, ts.value, scenario.node_count());
}

BoundReport delay_bound(const TandemScenario& scenario, double d) {
  if (!(d >= 0.0)) throw std::domain_error("delay_bound: d must be non-negative");
  const auto ts = solve_theta_star(scenario);
  const double alpha_ts = effective_bandwidth(scenario.arrival, ts.value);
  BoundReport r = error_function(alpha_ts * d, ts.value, scenario.node_count());
  r.argument = d;
  return r;
}

BoundReport eq16_variant_h1(const TandemScenario& scenario, double d) {
  if (scenario.node_count() != 1)
    throw std::domain_error("eq16_variant_h1: defined for single-node scenarios only");
  if (!(d >= 0.0)) throw std::domain_error("eq16_variant_h1: d must be non-negative");
  const auto ts = solve_theta_star(scenario);
  const double z = ts.value * effective_bandwidth(scenario.arrival, ts.value) * d;
  BoundReport r;
  r.method = BoundMethod::Eq16VariantH1;
  r.theta_star = ts.value;
  r.argument = d;
  r.value = (1.0 + z) * std::exp(-z);
  return clip_to_unit(r);
}

double exact_mm1_tandem(double mu, double rho, int node_count, double d) {
  if (!(rho > 0.0 && rho < 1.0)) throw std::domain_error("exact_mm1_tandem: rho must lie in (0, 1)");
  if (!(mu > 0.0)) throw std::domain_error("exact_mm1_tandem: mu must be positive");
  if (node_count < 1) throw std::domain_error("exact_mm1_tandem: node count must be >= 1");
  if (!(d >= 0.0)) throw std::domain_error("exact_mm1_tandem: d must be non-negative");
  return std::exp(log_gamma_q(static_cast<double>(node_count), mu * (1.0 - rho) * d));
}

namespace {

// log of the MGF delay bound at a given theta in (0, theta*).
double log_mgf_bound(const TandemScenario& scenario, double d, double theta) {
  const double alpha = effective_bandwidth(scenario.arrival, theta);
  const double beta = effective_capacity(scenario.services.front(), theta);
  const double gap = theta * (beta - alpha);
  if (!(gap > 0.0)) return std::numeric_limits<double>::infinity();
  const double log_prefactor = -std::log(-std::expm1(-gap));
  return static_cast<double>(scenario.node_count()) * log_prefactor - theta * alpha * d;
}

}  // namespace

BoundReport mgf_tandem_bound(const TandemScenario& scenario, double d) {
  if (!(d >= 0.0)) throw std::domain_error("mgf_tandem_bound: d must be non-negative");
  if (!scenario.homogeneous_services())
    throw std::invalid_argument("mgf_tandem_bound: requires homogeneous services");
  const auto ts = solve_theta_star(scenario);

  const auto objective = [&](double theta) { return log_mgf_bound(scenario, d, theta); };

  // Both endpoints are degenerate (theta -> 0 gives a vacuous bound, the
  // prefactor diverges at theta*), so scan a log grid strictly inside.
  constexpr int kGridPoints = 64;
  const double log_lo = std::log(ts.value * 1e-6);
  const double log_hi = std::log(ts.value * (1.0 - 1e-9));
  int best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  std::vector<double> log_theta(kGridPoints);
  for (int i = 0; i < kGridPoints; ++i) {
    log_theta[i] = log_lo + (log_hi - log_lo) * static_cast<double>(i) / (kGridPoints - 1);
    const double v = objective(std::exp(log_theta[i]));
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }

  // Golden-section on log theta inside the grid bracket around the minimum.
  double a = log_theta[std::max(0, best - 1)];
  double b = log_theta[std::min(kGridPoints - 1, best + 1)];
  constexpr double kInvPhi = 0.6180339887498949;
  double c1 = b - kInvPhi * (b - a);
  double c2 = a + kInvPhi * (b - a);
  double f1 = objective(std::exp(c1));
  double f2 = objective(std::exp(c2));
  for (int i = 0; i < 200 && (b - a) > 1e-10 * std::fabs(b); ++i) {
    if (f1 < f2) {
      b = c2;
      c2 = c1;
      f2 = f1;
      c1 = b - kInvPhi * (b - a);
      f1 = objective(std::exp(c1));
    } else {
      a = c1;
      c1 = c2;
      f1 = f2;
      c2 = a + kInvPhi * (b - a);
      f2 = objective(std::exp(c2));
    }
  }
  const double log_best = std::min({best_val, f1, f2});

  BoundReport r;
  r.method = BoundMethod::MgfBound;
  r.theta_star = ts.value;
  r.argument = d;
  if (log_best >= 0.0) {
    r.value = 1.0;
    r.clipped = true;
  } else {
    r.value = std::exp(log_best);
  }
  return r;
}

double convolve_tail_bounds(const TailBoundFn& f, const TailBoundFn& g, double sigma,
                            int grid_points, StieltjesRule rule) {
  if (!(sigma >= 0.0)) throw std::domain_error("convolve_tail_bounds: sigma must be non-negative");
  if (grid_points < 2) throw std::domain_error("convolve_tail_bounds: grid_points must be >= 2");
  if (!f.eval || !g.eval) throw std::domain_error("convolve_tail_bounds: missing eval");
  if (sigma == 0.0) return 1.0;

  const auto clipped_complement = [](const TailBoundFn& fn, double v) {
    const double raw = fn.eval(v);
    if (!(raw >= 0.0)) throw std::domain_error("convolve_tail_bounds: tail bounds must be non-negative");
    return 1.0 - std::min(1.0, raw);
  };

  constexpr double kMonotoneSlack = 1e-12;
  const double n = static_cast<double>(grid_points);
  double sum = 0.0;
  double g_prev = clipped_complement(g, 0.0);
  double f_prev = std::numeric_limits<double>::infinity();
  for (int k = 0; k < grid_points; ++k) {
    const double u0 = sigma * static_cast<double>(k) / n;
    const double u1 = sigma * static_cast<double>(k + 1) / n;
    const double v = rule == StieltjesRule::Midpoint ? sigma - 0.5 * (u0 + u1) : sigma - u1;
    const double ft = clipped_complement(f, v);
    const double gt = clipped_complement(g, u1);
    if (gt < g_prev - kMonotoneSlack)
      throw std::domain_error("convolve_tail_bounds: g is not non-increasing");
    if (ft > f_prev + kMonotoneSlack)
      throw std::domain_error("convolve_tail_bounds: f is not non-increasing");
    sum += ft * (gt - g_prev);
    g_prev = gt;
    f_prev = ft;
  }
  return std::clamp(1.0 - sum, 0.0, 1.0);
}

namespace {

IncrementModel scaled_to_mean(const IncrementModel& model, double mean) {
  IncrementModel out = model;
  switch (model.kind) {
    case ModelKind::Poisson:
    case ModelKind::Deterministic:
      out.rate = mean;
      break;
    case ModelKind::Bernoulli:
      out.prob = mean / model.size;
      break;
  }
  out.validate();
  return out;
}

TandemScenario instantiate(const SweepRequest& request, double value, Metric& metric,
                           double& argument) {
  metric = request.metric;
  argument = request.argument;
  switch (request.vary) {
    case SweepVariable::NodeCount: {
      if (request.base.services.size() != 1)
        throw std::invalid_argument("sweep over H: template must have exactly one service model");
      const double rounded = std::round(value);
      if (!(rounded >= 1.0) || std::fabs(rounded - value) > 1e-9)
        throw std::invalid_argument("sweep over H: values must be positive integers");
      std::vector<IncrementModel> services(static_cast<std::size_t>(rounded),
                                           request.base.services.front());
      return TandemScenario::make(request.base.arrival, std::move(services));
    }
    case SweepVariable::Utilization: {
      const double mean = value * request.base.min_service_mean_rate();
      return TandemScenario::make(scaled_to_mean(request.base.arrival, mean),
                                  request.base.services);
    }
    case SweepVariable::DelayArgument:
      metric = Metric::Delay;
      argument = value;
      return request.base;
    case SweepVariable::BacklogArgument:
      metric = Metric::Backlog;
      argument = value;
      return request.base;
  }
  throw std::invalid_argument("sweep: unknown variable");
}

BoundReport evaluate_method(const TandemScenario& scenario, BoundMethod method, Metric metric,
                            double argument) {
  switch (method) {
    case BoundMethod::DemiSubmartingale:
      return metric == Metric::Delay ? delay_bound(scenario, argument)
                                     : backlog_bound(scenario, argument);
    case BoundMethod::Eq16VariantH1:
      if (metric != Metric::Delay)
        throw std::invalid_argument("eq16-h1 is a delay bound");
      return eq16_variant_h1(scenario, argument);
    case BoundMethod::ExactMM1: {
      if (metric != Metric::Delay)
        throw std::invalid_argument("exact-mm1 is a delay result");
      if (scenario.arrival.kind != ModelKind::Poisson || !scenario.homogeneous_services() ||
          scenario.services.front().kind != ModelKind::Poisson)
        throw std::invalid_argument("exact-mm1 requires Poisson arrival and homogeneous Poisson services");
      const double mu = scenario.services.front().rate;
      const double rho = scenario.arrival.rate / mu;
      BoundReport r;
      r.method = BoundMethod::ExactMM1;
      r.value = exact_mm1_tandem(mu, rho, scenario.node_count(), argument);
      r.theta_star = -std::log(rho);
      r.argument = argument;
      return r;
    }
    case BoundMethod::MgfBound:
      if (metric != Metric::Delay)
        throw std::invalid_argument("mgf is a delay bound");
      return mgf_tandem_bound(scenario, argument);
  }
  throw std::invalid_argument("sweep: unknown method");
}

}  // namespace

std::vector<SweepCell> sweep(const SweepRequest& request) {
  std::vector<SweepCell> table;
  table.reserve(request.values.size() * request.methods.size());
  for (double value : request.values) {
    for (BoundMethod method : request.methods) {
      SweepCell cell;
      cell.vary_value = value;
      cell.method = method;
      try {
        Metric metric = request.metric;
        double argument = request.argument;
        const TandemScenario scenario = instantiate(request, value, metric, argument);
        cell.report = evaluate_method(scenario, method, metric, argument);
        cell.ok = true;
      } catch (const std::exception& e) {
        cell.error = e.what();
      }
      table.push_back(std::move(cell));
    }
  }
  return table;
}

}  // namespace snc
