// sncbound: end-to-end delay/backlog bounds for tandem GI/GI/1 queues,
// plus Monte-Carlo validation of the bounds and maximal inequalities.
//
// Exit codes: 0 success (and PASS for simulate/verify), 1 statistical
// verification failure, 2 parse or domain error, 3 unstable scenario,
// 4 containment failure, 5 I/O error.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "snc/bounds.hpp"
#include "snc/demi.hpp"
#include "snc/scenario_json.hpp"
#include "snc/simulate.hpp"
#include "snc/table.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnstable = 3;
constexpr int kExitContainment = 4;
constexpr int kExitIo = 5;

struct GlobalOptions {
  std::string format = "csv";
  bool quiet = false;
  std::optional<std::uint64_t> seed;

  snc::OutputFormat output_format() const {
    return format == "json" ? snc::OutputFormat::Json : snc::OutputFormat::Csv;
  }
};

void info(const GlobalOptions& opts, const std::string& msg) {
  if (!opts.quiet) std::cerr << msg << '\n';
}

std::vector<double> parse_values(const std::string& spec) {
  std::vector<double> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dots = item.find("..");
    if (dots != std::string::npos) {
      const long a = std::stol(item.substr(0, dots));
      const long b = std::stol(item.substr(dots + 2));
      for (long v = a; v <= b; ++v) out.push_back(static_cast<double>(v));
    } else if (!item.empty()) {
      out.push_back(std::stod(item));
    }
  }
  return out;
}

snc::BoundMethod parse_method(const std::string& name) {
  if (name == "demi") return snc::BoundMethod::DemiSubmartingale;
  if (name == "eq16-h1") return snc::BoundMethod::Eq16VariantH1;
  if (name == "exact-mm1") return snc::BoundMethod::ExactMM1;
  if (name == "mgf") return snc::BoundMethod::MgfBound;
  throw std::invalid_argument("unknown method '" + name + "'");
}

bool is_poisson_homogeneous(const snc::TandemScenario& sc) {
  return sc.arrival.kind == snc::ModelKind::Poisson && sc.homogeneous_services() &&
         sc.services.front().kind == snc::ModelKind::Poisson;
}

int run_bound(const GlobalOptions& opts, const std::string& path, const std::string& metric_name,
              double at) {
  const snc::ScenarioFile file = snc::load_scenario_file(path);
  const snc::TandemScenario& sc = file.scenario;
  const snc::Metric metric =
      metric_name == "backlog" ? snc::Metric::Backlog : snc::Metric::Delay;

  std::vector<snc::BoundTableRow> rows;
  const snc::BoundReport demi = metric == snc::Metric::Delay ? snc::delay_bound(sc, at)
                                                             : snc::backlog_bound(sc, at);
  rows.push_back(snc::to_table_row(at, demi));
  if (metric == snc::Metric::Delay && is_poisson_homogeneous(sc)) {
    const double mu = sc.services.front().rate;
    const double rho = sc.arrival.rate / mu;
    snc::BoundReport exact;
    exact.method = snc::BoundMethod::ExactMM1;
    exact.value = snc::exact_mm1_tandem(mu, rho, sc.node_count(), at);
    exact.theta_star = -std::log(rho);
    exact.argument = at;
    rows.push_back(snc::to_table_row(at, exact));
  }
  if (metric == snc::Metric::Delay && sc.homogeneous_services())
    rows.push_back(snc::to_table_row(at, snc::mgf_tandem_bound(sc, at)));

  snc::write_bound_table(std::cout, rows, opts.output_format());
  return kExitOk;
}

int run_figure2(const GlobalOptions& opts, double rho, double mud, int hmax) {
  if (!(rho > 0.0 && rho < 1.0)) throw std::domain_error("figure2: rho must lie in (0, 1)");
  if (!(mud > 0.0)) throw std::domain_error("figure2: mud must be positive");
  if (hmax < 1) throw std::domain_error("figure2: hmax must be >= 1");

  // mu = 1 work unit per slot; d = mud slots.
  const double d = mud;
  if (opts.output_format() == snc::OutputFormat::Csv) {
    std::cout << "H,exact,demi,mgf\n";
    for (int h = 1; h <= hmax; ++h) {
      const snc::TandemScenario sc = snc::mm1_tandem(1.0, rho, h);
      std::cout << h << ',' << snc::format_g17(snc::exact_mm1_tandem(1.0, rho, h, d)) << ','
                << snc::format_g17(snc::delay_bound(sc, d).value) << ','
                << snc::format_g17(snc::mgf_tandem_bound(sc, d).value) << '\n';
    }
  } else {
    std::cout << "[";
    for (int h = 1; h <= hmax; ++h) {
      const snc::TandemScenario sc = snc::mm1_tandem(1.0, rho, h);
      std::cout << (h == 1 ? "" : ",") << "\n  {\"H\": " << h
                << ", \"exact\": " << snc::format_g17(snc::exact_mm1_tandem(1.0, rho, h, d))
                << ", \"demi\": " << snc::format_g17(snc::delay_bound(sc, d).value)
                << ", \"mgf\": " << snc::format_g17(snc::mgf_tandem_bound(sc, d).value) << "}";
    }
    std::cout << "\n]\n";
  }
  return kExitOk;
}

// Empirical CCDF against the analytic bound: every point with a nonzero
// estimate must satisfy estimate <= bound + 3 binomial standard errors.
bool contained(const snc::EmpiricalCcdf& ccdf, const std::vector<double>& bounds) {
  for (std::size_t i = 0; i < ccdf.points.size(); ++i) {
    const auto& p = ccdf.points[i];
    if (p.n_exceed == 0) continue;
    const double se = std::sqrt(p.estimate * (1.0 - p.estimate) /
                                static_cast<double>(p.n_samples));
    if (p.estimate > bounds[i] + 3.0 * se) return false;
  }
  return true;
}

int run_simulate(const GlobalOptions& opts, const std::string& path, const std::string& out_dir,
                 int threads, int grid_points, const std::string& trace_path) {
  const snc::ScenarioFile file = snc::load_scenario_file(path);

  snc::SimConfig config;
  config.scenario = file.scenario;
  config.horizon = file.sim.horizon;
  config.replications = file.sim.replications;
  config.seed = opts.seed.value_or(file.sim.seed);
  config.warmup = file.sim.warmup;
  config.threads = threads;
  config.grid_points = grid_points;
  config.capture_trace = !trace_path.empty();
  config.validate();

  const snc::SimResult result = snc::simulate_tandem(config);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  const auto write_file = [&](const std::string& name, auto&& writer) {
    const std::filesystem::path p = std::filesystem::path(out_dir) / name;
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + p.string());
    writer(out);
    if (!out.good()) throw std::ios_base::failure("write failed: " + p.string());
    info(opts, "wrote " + p.string());
  };
  write_file("delay_ccdf.csv",
             [&](std::ostream& o) { snc::write_ccdf(o, result.delay, snc::OutputFormat::Csv); });
  write_file("backlog_ccdf.csv",
             [&](std::ostream& o) { snc::write_ccdf(o, result.backlog, snc::OutputFormat::Csv); });
  if (!trace_path.empty()) {
    std::ofstream out(trace_path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + trace_path);
    snc::write_trace(out, result.trace);
  }

  std::vector<double> delay_bounds, backlog_bounds;
  for (const auto& p : result.delay.points)
    delay_bounds.push_back(snc::delay_bound(config.scenario, p.threshold).value);
  for (const auto& p : result.backlog.points)
    backlog_bounds.push_back(snc::backlog_bound(config.scenario, p.threshold).value);
  const bool delay_ok = contained(result.delay, delay_bounds);
  const bool backlog_ok = contained(result.backlog, backlog_bounds);

  std::cout << "containment(delay): " << (delay_ok ? "PASS" : "FAIL") << '\n';
  std::cout << "containment(backlog): " << (backlog_ok ? "PASS" : "FAIL") << '\n';
  std::cout << "containment: " << (delay_ok && backlog_ok ? "PASS" : "FAIL") << '\n';
  return delay_ok && backlog_ok ? kExitOk : kExitContainment;
}

int run_verify(const GlobalOptions& opts, const std::string& path, std::optional<double> theta_opt,
               std::int64_t horizon, std::int64_t replications,
               const std::vector<double>& sigmas) {
  const snc::ScenarioFile file = snc::load_scenario_file(path);
  const snc::TandemScenario& sc = file.scenario;
  const std::uint64_t seed = opts.seed.value_or(file.sim.seed);

  const double ts = snc::single_node_theta_star(sc);
  const double theta = theta_opt.value_or(ts);
  if (!(theta > 0.0) || theta > ts * (1.0 + 1e-9))
    throw std::domain_error("verify: theta must lie in (0, theta*]");

  std::vector<snc::DemiTestReport> demi;
  std::vector<snc::DoobReport> doob;
  bool all_pass = true;
  for (snc::DemiProcess p : {snc::DemiProcess::X, snc::DemiProcess::Y, snc::DemiProcess::Z,
                             snc::DemiProcess::Ystar}) {
    const double th = p == snc::DemiProcess::Z ? ts : theta;  // Z holds at theta* only
    demi.push_back(snc::check_demisubmartingale(p, sc, th, horizon, replications, seed));
    doob.push_back(snc::check_doob(p, sc, th, sigmas, horizon, replications, seed));
    all_pass = all_pass && demi.back().all_pass && doob.back().all_pass;
  }

  snc::write_demi_report(std::cout, demi, opts.output_format());
  snc::write_doob_report(std::cout, doob, opts.output_format());
  std::cout << "verify: " << (all_pass ? "PASS" : "FAIL") << '\n';
  return all_pass ? kExitOk : kExitVerifyFail;
}

int run_sweep(const GlobalOptions& opts, const std::string& path, const std::string& vary,
              const std::string& values, const std::string& methods,
              const std::string& metric_name, double at) {
  snc::SweepRequest req;
  req.base = snc::load_scenario_file(path).scenario;
  if (vary == "H")
    req.vary = snc::SweepVariable::NodeCount;
  else if (vary == "rho")
    req.vary = snc::SweepVariable::Utilization;
  else if (vary == "d")
    req.vary = snc::SweepVariable::DelayArgument;
  else if (vary == "x")
    req.vary = snc::SweepVariable::BacklogArgument;
  else
    throw std::invalid_argument("sweep: --vary must be one of H, rho, d, x");
  req.values = parse_values(values);
  std::stringstream ss(methods);
  std::string m;
  while (std::getline(ss, m, ','))
    if (!m.empty()) req.methods.push_back(parse_method(m));
  req.metric = metric_name == "backlog" ? snc::Metric::Backlog : snc::Metric::Delay;
  req.argument = at;

  std::vector<snc::BoundTableRow> rows;
  for (const auto& cell : snc::sweep(req)) {
    if (!cell.ok)
      info(opts, "sweep cell (" + snc::format_g17(cell.vary_value) + ", " +
                     snc::to_string(cell.method) + "): " + cell.error);
    rows.push_back(snc::to_table_row(cell));
  }
  snc::write_bound_table(std::cout, rows, opts.output_format());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic network calculus bounds and validation for tandem GI/GI/1 queues"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_flag("--quiet", opts.quiet, "Suppress informational messages on stderr");
  std::uint64_t seed_value = 0;
  auto* seed_opt = app.add_option("--seed", seed_value, "Override the scenario RNG seed");

  // bound
  std::string bound_path, bound_metric = "delay";
  double bound_at = 0.0;
  auto* cmd_bound = app.add_subcommand("bound", "Violation-probability bounds at one argument");
  cmd_bound->add_option("scenario", bound_path, "Scenario JSON file")->required();
  cmd_bound->add_option("--metric", bound_metric, "delay or backlog")
      ->check(CLI::IsMember({"delay", "backlog"}))
      ->capture_default_str();
  cmd_bound->add_option("--at", bound_at, "Delay d (slots) or backlog x (work units)")->required();

  // figure2
  double fig_rho = 0.7, fig_mud = 112.5;
  int fig_hmax = 20;
  auto* cmd_fig = app.add_subcommand("figure2", "Delay bound comparison vs node count (CSV)");
  cmd_fig->add_option("--rho", fig_rho, "Utilization per node")->capture_default_str();
  cmd_fig->add_option("--mud", fig_mud, "Product mu * d")->capture_default_str();
  cmd_fig->add_option("--hmax", fig_hmax, "Number of node counts, H = 1..hmax")
      ->capture_default_str();

  // simulate
  std::string sim_path, sim_out = ".", sim_trace;
  int sim_threads = 1, sim_grid = 20;
  auto* cmd_sim = app.add_subcommand("simulate", "Monte-Carlo CCDFs plus containment verdict");
  cmd_sim->add_option("scenario", sim_path, "Scenario JSON file")->required();
  cmd_sim->add_option("--out", sim_out, "Output directory for CCDF CSV files")
      ->capture_default_str();
  cmd_sim->add_option("--threads", sim_threads, "Worker threads")->capture_default_str();
  cmd_sim->add_option("--grid-points", sim_grid, "CCDF grid size")->capture_default_str();
  cmd_sim->add_option("--trace", sim_trace, "Write a per-slot trace of replication 0 (CSV)");

  // verify
  std::string verify_path;
  double verify_theta = -1.0;
  std::int64_t verify_horizon = 50, verify_reps = 100000;
  std::string verify_sigmas = "2,5,10";
  auto* cmd_verify =
      app.add_subcommand("verify", "Demisubmartingale and maximal-inequality checks");
  cmd_verify->add_option("scenario", verify_path, "Scenario JSON file")->required();
  auto* theta_opt = cmd_verify->add_option("--theta", verify_theta, "Risk parameter, in (0, theta*]");
  cmd_verify->add_option("--horizon", verify_horizon, "Slots per replication")
      ->capture_default_str();
  cmd_verify->add_option("--replications", verify_reps, "Replications")->capture_default_str();
  cmd_verify->add_option("--sigma", verify_sigmas, "Comma-separated sigma grid")
      ->capture_default_str();

  // sweep
  std::string sweep_path, sweep_vary, sweep_values, sweep_methods = "demi",
                          sweep_metric = "delay";
  double sweep_at = 0.0;
  auto* cmd_sweep = app.add_subcommand("sweep", "Bound table over a varied parameter");
  cmd_sweep->add_option("scenario", sweep_path, "Scenario JSON file")->required();
  cmd_sweep->add_option("--vary", sweep_vary, "One of H, rho, d, x")->required();
  cmd_sweep->add_option("--values", sweep_values, "Comma list; integer ranges as a..b")
      ->required();
  cmd_sweep->add_option("--methods", sweep_methods, "Comma list of demi, eq16-h1, exact-mm1, mgf")
      ->capture_default_str();
  cmd_sweep->add_option("--metric", sweep_metric, "delay or backlog")
      ->check(CLI::IsMember({"delay", "backlog"}))
      ->capture_default_str();
  cmd_sweep->add_option("--at", sweep_at, "Fixed d or x when not the varied quantity")
      ->capture_default_str();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  CLI11_PARSE(app, argc, argv);
  if (seed_opt->count() > 0) opts.seed = seed_value;

  try {
    if (cmd_bound->parsed()) return run_bound(opts, bound_path, bound_metric, bound_at);
    if (cmd_fig->parsed()) return run_figure2(opts, fig_rho, fig_mud, fig_hmax);
    if (cmd_sim->parsed())
      return run_simulate(opts, sim_path, sim_out, sim_threads, sim_grid, sim_trace);
    if (cmd_verify->parsed()) {
      std::optional<double> theta;
      if (theta_opt->count() > 0) theta = verify_theta;
      return run_verify(opts, verify_path, theta, verify_horizon, verify_reps,
                        parse_values(verify_sigmas));
    }
    if (cmd_sweep->parsed())
      return run_sweep(opts, sweep_path, sweep_vary, sweep_values, sweep_methods, sweep_metric,
                       sweep_at);
  } catch (const snc::instability_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnstable;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitOk;
}
