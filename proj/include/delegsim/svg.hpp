#pragma once

#include <string>

#include "delegsim/experiment.hpp"

namespace delegsim {

// fig1a: ensemble success probability vs trial, one labeled polyline per
// policy. fig1b: ensemble cumulative regret vs trial plus the theoretical
// bound curve (dashed, clipped to the plot area when it leaves the regret
// scale). Linear axes. Every data polyline carries a data-series attribute
// with its label, and its points encode the full series.
std::string fig1a_svg(const ExperimentReport& report);
std::string fig1b_svg(const ExperimentReport& report);

// Writes fig1a.svg and fig1b.svg into dir (created if absent). I/O failures
// throw std::runtime_error naming the path.
void emit_svg(const ExperimentReport& report, const std::string& dir);

}  // namespace delegsim
