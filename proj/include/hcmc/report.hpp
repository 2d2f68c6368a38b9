#pragma once

#include <string>
#include <vector>

#include "hcmc/harness.hpp"

namespace hcmc {

/// `{ "version": 1, "checks": [...] }`, pretty-printed with a trailing newline.
std::string report_json(const std::vector<CheckReport>& reports);

/// Rows `check,measured,bound,pass`, one per report; `measured` is the
/// report's primary measurement.
std::string report_checks_csv(const std::vector<CheckReport>& reports);

/// Rows `series,check,h,value,error` for every refinement or time series.
std::string report_convergence_csv(const std::vector<CheckReport>& reports);

/// Writes report.json, checks.csv and convergence.csv into `dir`, creating it
/// when missing. Throws IoError naming the offending path.
void emit_report(const std::vector<CheckReport>& reports, const std::string& dir);

bool all_pass(const std::vector<CheckReport>& reports);

}  // namespace hcmc
