#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "snc/bounds.hpp"
#include "snc/demi.hpp"
#include "snc/envelope.hpp"
#include "snc/gamma_tail.hpp"
#include "snc/models.hpp"
#include "snc/rng.hpp"
#include "snc/scenario.hpp"
#include "snc/scenario_json.hpp"
#include "snc/simulate.hpp"

namespace py = pybind11;
using namespace snc;

PYBIND11_MODULE(sncbound, m) {
  m.doc() = "End-to-end delay/backlog bounds for tandem GI/GI/1 queues with "
            "Monte-Carlo validation";

  py::register_exception<instability_error>(m, "InstabilityError");

  py::enum_<ProcessRole>(m, "ProcessRole")
      .value("Arrival", ProcessRole::Arrival)
      .value("Service", ProcessRole::Service);

  py::class_<IncrementModel>(m, "IncrementModel")
      .def_static("poisson", &IncrementModel::poisson, py::arg("rate"), py::arg("role"))
      .def_static("deterministic", &IncrementModel::deterministic, py::arg("rate"),
                  py::arg("role"))
      .def_static("bernoulli", &IncrementModel::bernoulli, py::arg("prob"), py::arg("size"),
                  py::arg("role"))
      .def("mean_rate", &IncrementModel::mean_rate)
      .def("__repr__", [](const IncrementModel& m_) {
        std::ostringstream os;
        os << "IncrementModel(" << to_string(m_.kind) << ")";
        return os.str();
      });

  py::class_<TandemScenario>(m, "TandemScenario")
      .def_static("make", &TandemScenario::make, py::arg("arrival"), py::arg("services"))
      .def_property_readonly("node_count", &TandemScenario::node_count)
      .def_property_readonly("arrival", [](const TandemScenario& s) { return s.arrival; })
      .def_property_readonly("services", [](const TandemScenario& s) { return s.services; });

  m.def("mm1_tandem", &mm1_tandem, py::arg("mu"), py::arg("rho"), py::arg("node_count"));

  m.def("effective_bandwidth", &effective_bandwidth, py::arg("model"), py::arg("theta"));
  m.def("effective_capacity", &effective_capacity, py::arg("model"), py::arg("theta"));
  m.def("log_gamma_q", &log_gamma_q, py::arg("a"), py::arg("x"));
  m.def("gamma_q", &gamma_q, py::arg("a"), py::arg("x"));

  m.def(
      "theta_star",
      [](const TandemScenario& sc, double theta_hi, double tol) {
        const auto r = theta_star(sc, theta_hi, tol);
        return py::make_tuple(r.value, r.saturated);
      },
      py::arg("scenario"), py::arg("theta_hi") = 50.0, py::arg("tol") = 1e-12,
      "Returns (theta_star, saturated)");

  py::class_<BoundReport>(m, "BoundReport")
      .def_property_readonly("method", [](const BoundReport& r) { return to_string(r.method); })
      .def_readonly("value", &BoundReport::value)
      .def_readonly("theta_star", &BoundReport::theta_star)
      .def_readonly("argument", &BoundReport::argument)
      .def_readonly("valid", &BoundReport::valid)
      .def_readonly("clipped", &BoundReport::clipped)
      .def("__repr__", [](const BoundReport& r) {
        std::ostringstream os;
        os << "BoundReport(" << to_string(r.method) << ", value=" << r.value << ")";
        return os.str();
      });

  m.def("error_function", &error_function, py::arg("x"), py::arg("theta_star"),
        py::arg("node_count"));
  m.def("backlog_bound", &backlog_bound, py::arg("scenario"), py::arg("x"));
  m.def("delay_bound", &delay_bound, py::arg("scenario"), py::arg("d"));
  m.def("eq16_variant_h1", &eq16_variant_h1, py::arg("scenario"), py::arg("d"));
  m.def("exact_mm1_tandem", &exact_mm1_tandem, py::arg("mu"), py::arg("rho"),
        py::arg("node_count"), py::arg("d"));
  m.def("mgf_tandem_bound", &mgf_tandem_bound, py::arg("scenario"), py::arg("d"));

  m.def(
      "convolve_tail_bounds",
      [](const std::function<double(double)>& f, const std::function<double(double)>& g,
         double sigma, int grid_points, bool conservative) {
        return convolve_tail_bounds(TailBoundFn{f}, TailBoundFn{g}, sigma, grid_points,
                                    conservative ? StieltjesRule::Conservative
                                                 : StieltjesRule::Midpoint);
      },
      py::arg("f"), py::arg("g"), py::arg("sigma"), py::arg("grid_points") = 10000,
      py::arg("conservative") = false);

  py::class_<CcdfPoint>(m, "CcdfPoint")
      .def_readonly("threshold", &CcdfPoint::threshold)
      .def_readonly("estimate", &CcdfPoint::estimate)
      .def_readonly("half_width_95", &CcdfPoint::half_width_95)
      .def_readonly("n_samples", &CcdfPoint::n_samples)
      .def_readonly("n_exceed", &CcdfPoint::n_exceed);

  py::class_<EmpiricalCcdf>(m, "EmpiricalCcdf")
      .def_readonly("points", &EmpiricalCcdf::points);

  py::class_<SimResult>(m, "SimResult")
      .def_readonly("delay", &SimResult::delay)
      .def_readonly("backlog", &SimResult::backlog);

  m.def(
      "simulate_tandem",
      [](const TandemScenario& scenario, std::int64_t horizon, std::int64_t replications,
         std::uint64_t seed, std::int64_t warmup, int threads, int grid_points) {
        SimConfig config;
        config.scenario = scenario;
        config.horizon = horizon;
        config.replications = replications;
        config.seed = seed;
        config.warmup = warmup;
        config.threads = threads;
        config.grid_points = grid_points;
        return simulate_tandem(config);
      },
      py::arg("scenario"), py::arg("horizon"), py::arg("replications"), py::arg("seed") = 1,
      py::arg("warmup") = -1, py::arg("threads") = 1, py::arg("grid_points") = 20,
      py::call_guard<py::gil_scoped_release>());

  py::enum_<DemiProcess>(m, "DemiProcess")
      .value("X", DemiProcess::X)
      .value("Y", DemiProcess::Y)
      .value("Z", DemiProcess::Z)
      .value("Ystar", DemiProcess::Ystar);

  py::class_<DemiRow>(m, "DemiRow")
      .def_readonly("test_fn", &DemiRow::test_fn)
      .def_readonly("lag", &DemiRow::lag)
      .def_readonly("estimate", &DemiRow::estimate)
      .def_readonly("std_error", &DemiRow::std_error)
      .def_readonly("pass_", &DemiRow::pass);

  py::class_<DemiTestReport>(m, "DemiTestReport")
      .def_readonly("theta", &DemiTestReport::theta)
      .def_readonly("rows", &DemiTestReport::rows)
      .def_readonly("all_pass", &DemiTestReport::all_pass);

  py::class_<DoobRow>(m, "DoobRow")
      .def_readonly("sigma", &DoobRow::sigma)
      .def_readonly("estimate", &DoobRow::estimate)
      .def_readonly("std_error", &DoobRow::std_error)
      .def_readonly("rhs", &DoobRow::rhs)
      .def_readonly("pass_", &DoobRow::pass);

  py::class_<DoobReport>(m, "DoobReport")
      .def_readonly("theta", &DoobReport::theta)
      .def_readonly("rows", &DoobReport::rows)
      .def_readonly("all_pass", &DoobReport::all_pass);

  m.def("check_demisubmartingale", &check_demisubmartingale, py::arg("process"),
        py::arg("scenario"), py::arg("theta"), py::arg("horizon"), py::arg("replications"),
        py::arg("seed"), py::arg("lags") = std::vector<std::int64_t>{},
        py::call_guard<py::gil_scoped_release>());
  m.def("check_doob", &check_doob, py::arg("process"), py::arg("scenario"), py::arg("theta"),
        py::arg("sigma_grid"), py::arg("horizon"), py::arg("replications"), py::arg("seed"),
        py::call_guard<py::gil_scoped_release>());
  m.def("single_node_theta_star", &single_node_theta_star, py::arg("scenario"));

  m.def("parse_scenario_json",
        [](const std::string& text) { return parse_scenario_json(text).scenario; },
        py::arg("text"));
}
