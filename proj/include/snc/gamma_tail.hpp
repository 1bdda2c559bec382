#pragma once

namespace snc {

// log of the regularized upper incomplete gamma function Q(a, x), a > 0, x >= 0.
// Continued fraction for x > a + 1, series for the lower function otherwise,
// so the result stays accurate deep in the tail where Q underflows term-wise
// summation. Q(a, 0) == 1 exactly (returns 0.0).
double log_gamma_q(double a, double x);

double gamma_q(double a, double x);

// Tail of an Erlang-k (equivalently, CCDF of a Poisson count < k): Q(k, x).
double erlang_tail(int k, double x);

}  // namespace snc
