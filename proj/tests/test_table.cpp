#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "snc/table.hpp"

using namespace snc;

TEST_CASE("g17 serialization round-trips doubles exactly") {
  for (double v : {2.2007019879753666e-15, 0.35667494393873245, 1.0 / 3.0, 112.5, 0.0,
                   1e308, 5e-324}) {
    const std::string s = format_g17(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("bound table CSV layout") {
  BoundReport report;
  report.method = BoundMethod::DemiSubmartingale;
  report.value = 0.25;
  report.theta_star = 0.5;
  report.valid = true;

  std::ostringstream out;
  write_bound_table(out, {to_table_row(3.0, report)}, OutputFormat::Csv);
  CHECK(out.str() ==
        "vary_value,method,bound,theta_star,valid,clipped\n"
        "3,demi,0.25,0.5,true,false\n");
}

TEST_CASE("errored sweep cells serialize with empty numeric fields") {
  SweepCell cell;
  cell.vary_value = 2.0;
  cell.method = BoundMethod::MgfBound;
  cell.error = "boom";
  std::ostringstream out;
  write_bound_table(out, {to_table_row(cell)}, OutputFormat::Csv);
  CHECK(out.str() ==
        "vary_value,method,bound,theta_star,valid,clipped\n"
        "2,mgf,,,false,false\n");

  std::ostringstream js;
  write_bound_table(js, {to_table_row(cell)}, OutputFormat::Json);
  CHECK(js.str().find("\"error\": \"boom\"") != std::string::npos);
}

TEST_CASE("ccdf CSV has the documented header") {
  EmpiricalCcdf ccdf;
  ccdf.points.push_back({1.0, 0.5, 0.01, 100, 50});
  std::ostringstream out;
  write_ccdf(out, ccdf, OutputFormat::Csv);
  CHECK(out.str() ==
        "threshold,estimate,half_width_95,n_samples\n"
        "1,0.5,0.01,100\n");
}

TEST_CASE("trace CSV emits one backlog column per node") {
  std::ostringstream out;
  write_trace(out, {{1, {0.5, 0.0}, 2.0, 1.5}});
  CHECK(out.str() ==
        "t,backlog_1,backlog_2,cum_arrivals,cum_departures\n"
        "1,0.5,0,2,1.5\n");
}
