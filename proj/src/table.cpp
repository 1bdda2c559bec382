#include "snc/table.hpp"

#include <cstdio>

#include <json.hpp>

namespace snc {

std::string format_g17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

BoundTableRow to_table_row(double vary_value, const BoundReport& report) {
  BoundTableRow row;
  row.vary_value = vary_value;
  row.method = to_string(report.method);
  row.bound = report.value;
  row.theta_star = report.theta_star;
  row.valid = report.valid;
  row.clipped = report.clipped;
  return row;
}

BoundTableRow to_table_row(const SweepCell& cell) {
  if (cell.ok) return to_table_row(cell.vary_value, cell.report);
  BoundTableRow row;
  row.vary_value = cell.vary_value;
  row.method = to_string(cell.method);
  row.error = cell.error;
  return row;
}

namespace {

using nlohmann::json;

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

void write_bound_table(std::ostream& out, const std::vector<BoundTableRow>& rows,
                       OutputFormat format) {
  if (format == OutputFormat::Csv) {
    out << "vary_value,method,bound,theta_star,valid,clipped\n";
    for (const auto& r : rows) {
      out << format_g17(r.vary_value) << ',' << r.method << ','
          << (r.bound ? format_g17(*r.bound) : "") << ','
          << (r.theta_star ? format_g17(*r.theta_star) : "") << ',' << bool_str(r.valid) << ','
          << bool_str(r.clipped) << '\n';
    }
    return;
  }
  json arr = json::array();
  for (const auto& r : rows) {
    json obj;
    obj["vary_value"] = r.vary_value;
    obj["method"] = r.method;
    if (r.bound) obj["bound"] = *r.bound;
    if (r.theta_star) obj["theta_star"] = *r.theta_star;
    obj["valid"] = r.valid;
    obj["clipped"] = r.clipped;
    if (!r.error.empty()) obj["error"] = r.error;
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

void write_ccdf(std::ostream& out, const EmpiricalCcdf& ccdf, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    out << "threshold,estimate,half_width_95,n_samples\n";
    for (const auto& p : ccdf.points)
      out << format_g17(p.threshold) << ',' << format_g17(p.estimate) << ','
          << format_g17(p.half_width_95) << ',' << p.n_samples << '\n';
    return;
  }
  json arr = json::array();
  for (const auto& p : ccdf.points)
    arr.push_back({{"threshold", p.threshold},
                   {"estimate", p.estimate},
                   {"half_width_95", p.half_width_95},
                   {"n_samples", p.n_samples}});
  out << arr.dump(2) << '\n';
}

void write_trace(std::ostream& out, const std::vector<SlotTraceRow>& trace) {
  const std::size_t nodes = trace.empty() ? 0 : trace.front().node_backlog.size();
  out << "t";
  for (std::size_t h = 1; h <= nodes; ++h) out << ",backlog_" << h;
  out << ",cum_arrivals,cum_departures\n";
  for (const auto& row : trace) {
    out << row.slot;
    for (double b : row.node_backlog) out << ',' << format_g17(b);
    out << ',' << format_g17(row.cum_arrivals) << ',' << format_g17(row.cum_departures) << '\n';
  }
}

void write_demi_report(std::ostream& out, const std::vector<DemiTestReport>& reports,
                       OutputFormat format) {
  if (format == OutputFormat::Csv) {
    out << "process,theta,test_fn,lag,estimate,std_error,pass\n";
    for (const auto& rep : reports)
      for (const auto& r : rep.rows)
        out << to_string(rep.process) << ',' << format_g17(rep.theta) << ',' << r.test_fn << ','
            << r.lag << ',' << format_g17(r.estimate) << ',' << format_g17(r.std_error) << ','
            << bool_str(r.pass) << '\n';
    return;
  }
  json arr = json::array();
  for (const auto& rep : reports)
    for (const auto& r : rep.rows)
      arr.push_back({{"process", to_string(rep.process)},
                     {"theta", rep.theta},
                     {"test_fn", r.test_fn},
                     {"lag", r.lag},
                     {"estimate", r.estimate},
                     {"std_error", r.std_error},
                     {"pass", r.pass}});
  out << arr.dump(2) << '\n';
}

void write_doob_report(std::ostream& out, const std::vector<DoobReport>& reports,
                       OutputFormat format) {
  if (format == OutputFormat::Csv) {
    out << "process,theta,sigma,estimate,std_error,rhs,pass\n";
    for (const auto& rep : reports)
      for (const auto& r : rep.rows)
        out << to_string(rep.process) << ',' << format_g17(rep.theta) << ','
            << format_g17(r.sigma) << ',' << format_g17(r.estimate) << ','
            << format_g17(r.std_error) << ',' << format_g17(r.rhs) << ',' << bool_str(r.pass)
            << '\n';
    return;
  }
  json arr = json::array();
  for (const auto& rep : reports)
    for (const auto& r : rep.rows)
      arr.push_back({{"process", to_string(rep.process)},
                     {"theta", rep.theta},
                     {"sigma", r.sigma},
                     {"estimate", r.estimate},
                     {"std_error", r.std_error},
                     {"rhs", r.rhs},
                     {"pass", r.pass}});
  out << arr.dump(2) << '\n';
}

}  // namespace snc
