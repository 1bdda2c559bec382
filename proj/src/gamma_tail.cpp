#include "snc/gamma_tail.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace snc {

namespace {

// Modified Lentz evaluation of the continued fraction for Q(a, x), x > a + 1.
double log_q_continued_fraction(double a, double x) {
  constexpr double kTiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return -x + a * std::log(x) - std::lgamma(a) + std::log(h);
}

// Series for the lower function P(a, x), x <= a + 1; Q = 1 - P is then safe
// because P stays bounded away from 1 on this branch.
double log_q_series(double a, double x) {
  double ap = a;
  double del = 1.0 / a;
  double sum = del;
  for (int i = 0; i < 10000; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-17) break;
  }
  const double log_p = -x + a * std::log(x) - std::lgamma(a) + std::log(sum);
  const double p = std::exp(log_p);
  if (p >= 1.0) return -std::numeric_limits<double>::infinity();
  return std::log1p(-p);
}

}  // namespace

double log_gamma_q(double a, double x) {
  if (!(a > 0.0) || !std::isfinite(a)) throw std::domain_error("log_gamma_q: a must be positive");
  if (!(x >= 0.0)) throw std::domain_error("log_gamma_q: x must be non-negative");
  if (x == 0.0) return 0.0;
  if (x > a + 1.0) return log_q_continued_fraction(a, x);
  return log_q_series(a, x);
}

double gamma_q(double a, double x) { return std::exp(log_gamma_q(a, x)); }

double erlang_tail(int k, double x) {
  if (k < 1) throw std::domain_error("erlang_tail: k must be >= 1");
  return gamma_q(static_cast<double>(k), x);
}

}  // namespace snc
