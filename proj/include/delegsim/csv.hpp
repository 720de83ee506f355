#pragma once

#include <string>

#include "delegsim/experiment.hpp"

namespace delegsim {

// CSV images of a report; doubles printed with %.17g so parsing round-trips
// exactly. Policies appear in config order.
std::string series_csv(const ExperimentReport& report);
std::string summary_csv(const ExperimentReport& report);
std::string seeds_csv(const ExperimentReport& report);

// Writes series.csv, summary.csv, seeds.csv into dir (created if absent).
// I/O failures throw std::runtime_error naming the path.
void emit_csv(const ExperimentReport& report, const std::string& dir);

}  // namespace delegsim
