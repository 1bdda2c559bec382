#pragma once

#include <functional>
#include <string>
#include <vector>

#include "snc/models.hpp"
#include "snc/scenario.hpp"

namespace snc {

struct ThetaStarResult {
  double value = 0.0;
  bool saturated = false;  // alpha <= min beta over the whole bracket; value == theta_hi
};

// Largest theta in (0, theta_hi] with alpha(theta) <= min_h beta_h(theta),
// by bisection to absolute tolerance tol on theta. tol <= 0 runs the
// bisection to bracket collapse (machine precision). Throws
// instability_error when no feasible theta exists.
ThetaStarResult theta_star(const RateFunction& alpha, const std::vector<RateFunction>& betas,
                           double theta_hi = 50.0, double tol = 1e-12);
ThetaStarResult theta_star(const TandemScenario& scenario, double theta_hi = 50.0,
                           double tol = 1e-12);

enum class BoundMethod { DemiSubmartingale, Eq16VariantH1, ExactMM1, MgfBound };

std::string to_string(BoundMethod method);

struct BoundReport {
  BoundMethod method = BoundMethod::DemiSubmartingale;
  double value = 1.0;       // violation probability bound, in [0, 1]
  double theta_star = 0.0;  // decay rate used, 1/work-units
  double argument = 0.0;    // x (work units) or d (slots)
  bool valid = true;        // false iff the H > 1 constraint x >= (H-1)/theta* fails
  bool clipped = false;     // a value above 1 was clamped
};

// The error function of the end-to-end bounds: exp(-theta* x) for a single
// node, and for H > 1 with y = theta* x - (H-1) >= 0 the Poisson tail
// exp(-y) sum_{h=0}^{H} y^h / h!, evaluated in log space as the regularized
// upper incomplete gamma Q(H+1, y). y < 0 yields the trivial bound 1 with
// valid = false.
BoundReport error_function(double x, double theta_star, int node_count);

// P{B(t) > x} bound for the end-to-end backlog.
BoundReport backlog_bound(const TandemScenario& scenario, double x);

// P{W(t) > d} bound for the end-to-end delay: the error function at
// x = alpha(theta*) d.
BoundReport delay_bound(const TandemScenario& scenario, double d);

// The weaker single-hop bound obtained by forcing H = 1 into the multi-hop
// formula: (1 + theta* alpha(theta*) d) exp(-theta* alpha(theta*) d).
BoundReport eq16_variant_h1(const TandemScenario& scenario, double d);

// Exact steady-state end-to-end delay tail of a tandem of H M/M/1 queues:
// the Erlang-H tail Q(H, mu (1-rho) d).
double exact_mm1_tandem(double mu, double rho, int node_count, double d);

// Competing MGF-based end-to-end delay bound
//   inf_{0 < theta < theta*} (1 - exp(-theta (beta - alpha)))^{-H} exp(-theta alpha d)
// for homogeneous services; 64-point log-grid scan then golden-section.
BoundReport mgf_tandem_bound(const TandemScenario& scenario, double d);

// Non-increasing sigma -> bound on P{. > sigma}.
struct TailBoundFn {
  std::function<double(double)> eval;
};

enum class StieltjesRule {
  Midpoint,      // midpoint of f-tilde on each cell
  Conservative,  // left endpoint of f-tilde (in its own argument); converges from above
};

// Bound on P{F + G > sigma} from tail bounds f, g on the independent parts:
// 1 - integral_0^sigma f~(sigma - u) dg~(u) with f~ = 1 - min(1, f),
// g~ = 1 - min(1, g), as a Riemann-Stieltjes sum on a uniform grid.
double convolve_tail_bounds(const TailBoundFn& f, const TailBoundFn& g, double sigma,
                            int grid_points, StieltjesRule rule = StieltjesRule::Midpoint);

enum class Metric { Delay, Backlog };
enum class SweepVariable { NodeCount, Utilization, DelayArgument, BacklogArgument };

struct SweepRequest {
  TandemScenario base;
  SweepVariable vary = SweepVariable::NodeCount;
  std::vector<double> values;
  std::vector<BoundMethod> methods;
  Metric metric = Metric::Delay;
  double argument = 0.0;  // d or x when it is not the varied quantity
};

struct SweepCell {
  double vary_value = 0.0;
  BoundMethod method = BoundMethod::DemiSubmartingale;
  bool ok = false;
  BoundReport report;
  std::string error;  // set when !ok; the sweep itself never throws per cell
};

// One row per value x method, in request order; per-cell failures are
// recorded in the cell and the sweep continues.
std::vector<SweepCell> sweep(const SweepRequest& request);

}  // namespace snc
