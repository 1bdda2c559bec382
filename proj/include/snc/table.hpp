#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "snc/bounds.hpp"
#include "snc/demi.hpp"
#include "snc/simulate.hpp"

namespace snc {

// 17-significant-digit serialization; round-trips every finite double.
std::string format_g17(double value);

enum class OutputFormat { Csv, Json };

struct BoundTableRow {
  double vary_value = 0.0;
  std::string method;
  std::optional<double> bound;       // empty on a per-cell error
  std::optional<double> theta_star;  // empty on a per-cell error
  bool valid = false;
  bool clipped = false;
  std::string error;
};

BoundTableRow to_table_row(double vary_value, const BoundReport& report);
BoundTableRow to_table_row(const SweepCell& cell);

// Columns: vary_value, method, bound, theta_star, valid, clipped.
void write_bound_table(std::ostream& out, const std::vector<BoundTableRow>& rows,
                       OutputFormat format);

// Columns: threshold, estimate, half_width_95, n_samples.
void write_ccdf(std::ostream& out, const EmpiricalCcdf& ccdf, OutputFormat format);

// Columns: t, backlog_1..backlog_H, cum_arrivals, cum_departures.
void write_trace(std::ostream& out, const std::vector<SlotTraceRow>& trace);

void write_demi_report(std::ostream& out, const std::vector<DemiTestReport>& reports,
                       OutputFormat format);
void write_doob_report(std::ostream& out, const std::vector<DoobReport>& reports,
                       OutputFormat format);

}  // namespace snc
