#include "delegsim/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace delegsim {

namespace {

constexpr double kWidth = 960.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 30.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 55.0;
constexpr double kPlotW = kWidth - kLeft - kRight;
constexpr double kPlotH = kHeight - kTop - kBottom;

const char* policy_color(PolicyKind k) {
  switch (k) {
    case PolicyKind::UCB1: return "#d62728";
    case PolicyKind::DID: return "#1f77b4";
    case PolicyKind::EGREEDY: return "#2ca02c";
    case PolicyKind::DIG: return "#9467bd";
  }
  return "#000000";
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

double x_of(int64_t t, int64_t T) {
  if (T <= 1) return kLeft;
  return kLeft + kPlotW * static_cast<double>(t) / static_cast<double>(T - 1);
}

double y_of(double v, double ymax) {
  if (ymax <= 0.0) ymax = 1.0;
  return kTop + kPlotH * (1.0 - v / ymax);
}

std::string polyline(const std::vector<double>& series, int64_t T, double ymax,
                     const std::string& label, const char* color, bool dashed,
                     bool clip) {
  std::string pts;
  pts.reserve(series.size() * 16);
  for (int64_t t = 0; t < static_cast<int64_t>(series.size()); ++t) {
    pts += num(x_of(t, T));
    pts += ',';
    pts += num(y_of(series[t], ymax));
    pts += ' ';
  }
  std::string out = "<polyline data-series=\"" + label + "\" fill=\"none\" stroke=\"";
  out += color;
  out += "\" stroke-width=\"1.6\"";
  if (dashed) out += " stroke-dasharray=\"7 4\"";
  if (clip) out += " clip-path=\"url(#plot-area)\"";
  out += " points=\"" + pts + "\"/>\n";
  return out;
}

std::string axes(const std::string& title, const std::string& ylabel, int64_t T,
                 double ymax, int yticks) {
  std::string s;
  s += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" +
       num(kPlotW) + "\" height=\"" + num(kPlotH) +
       "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";
  s += "<text x=\"" + num(kLeft + kPlotW / 2) +
       "\" y=\"22\" text-anchor=\"middle\" font-size=\"16\" "
       "font-family=\"sans-serif\">" + title + "</text>\n";
  s += "<text x=\"" + num(kLeft + kPlotW / 2) + "\" y=\"" +
       num(kHeight - 12.0) +
       "\" text-anchor=\"middle\" font-size=\"13\" "
       "font-family=\"sans-serif\">trial</text>\n";
  s += "<text x=\"16\" y=\"" + num(kTop + kPlotH / 2) +
       "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" "
       "transform=\"rotate(-90 16 " + num(kTop + kPlotH / 2) + ")\">" + ylabel +
       "</text>\n";
  const int xticks = 5;
  for (int i = 0; i <= xticks; ++i) {
    const double frac = static_cast<double>(i) / xticks;
    const double x = kLeft + kPlotW * frac;
    const int64_t tv = T <= 1 ? 0 : static_cast<int64_t>(frac * (T - 1) + 0.5);
    s += "<line x1=\"" + num(x) + "\" y1=\"" + num(kTop + kPlotH) + "\" x2=\"" +
         num(x) + "\" y2=\"" + num(kTop + kPlotH + 5) +
         "\" stroke=\"#333\"/>\n";
    s += "<text x=\"" + num(x) + "\" y=\"" + num(kTop + kPlotH + 20) +
         "\" text-anchor=\"middle\" font-size=\"12\" "
         "font-family=\"sans-serif\">" + std::to_string(tv) + "</text>\n";
  }
  for (int i = 0; i <= yticks; ++i) {
    const double frac = static_cast<double>(i) / yticks;
    const double y = kTop + kPlotH * (1.0 - frac);
    char lbl[40];
    std::snprintf(lbl, sizeof(lbl), "%g", ymax * frac);
    s += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(y) + "\" x2=\"" +
         num(kLeft) + "\" y2=\"" + num(y) + "\" stroke=\"#333\"/>\n";
    s += "<text x=\"" + num(kLeft - 9) + "\" y=\"" + num(y + 4) +
         "\" text-anchor=\"end\" font-size=\"12\" "
         "font-family=\"sans-serif\">" + lbl + "</text>\n";
  }
  return s;
}

std::string legend(const ExperimentReport& report, bool with_bound) {
  std::string s;
  double y = kTop + 16.0;
  const double x = kLeft + 12.0;
  for (const auto& ps : report.series) {
    s += "<line x1=\"" + num(x) + "\" y1=\"" + num(y - 4) + "\" x2=\"" +
         num(x + 26) + "\" y2=\"" + num(y - 4) + "\" stroke=\"" +
         policy_color(ps.policy) + "\" stroke-width=\"2\"/>\n";
    s += "<text x=\"" + num(x + 32) + "\" y=\"" + num(y) +
         "\" font-size=\"13\" font-family=\"sans-serif\">" +
         policy_name(ps.policy) + "</text>\n";
    y += 18.0;
  }
  if (with_bound && !report.series.empty()) {
    s += "<line x1=\"" + num(x) + "\" y1=\"" + num(y - 4) + "\" x2=\"" +
         num(x + 26) + "\" y2=\"" + num(y - 4) +
         "\" stroke=\"#333\" stroke-width=\"2\" stroke-dasharray=\"7 4\"/>\n";
    s += "<text x=\"" + num(x + 32) + "\" y=\"" + num(y) +
         "\" font-size=\"13\" font-family=\"sans-serif\">ucb1_bound</text>\n";
  }
  return s;
}

std::string svg_open() {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) +
         " " + num(kHeight) + "\">\n<defs><clipPath id=\"plot-area\"><rect x=\"" +
         num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(kPlotW) +
         "\" height=\"" + num(kPlotH) + "\"/></clipPath></defs>\n" +
         "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void write_file(const std::string& dir, const std::string& name,
                const std::string& content) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path path = fs::path(dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

std::string fig1a_svg(const ExperimentReport& report) {
  const int64_t T = report.config.trials;
  std::string s = svg_open();
  s += axes("Ensemble probability of successful execution", "success probability",
            T, 1.0, 5);
  for (const auto& ps : report.series)
    s += polyline(ps.mean_prob, T, 1.0, policy_name(ps.policy),
                  policy_color(ps.policy), false, false);
  s += legend(report, false);
  s += "</svg>\n";
  return s;
}

std::string fig1b_svg(const ExperimentReport& report) {
  const int64_t T = report.config.trials;
  double ymax = 0.0;
  for (const auto& ps : report.series)
    for (double v : ps.mean_cum_regret) ymax = std::max(ymax, v);
  ymax = ymax > 0.0 ? 1.05 * ymax : 1.0;

  std::string s = svg_open();
  s += axes("Ensemble cumulative regret and theoretical bound",
            "cumulative regret", T, ymax, 5);
  for (const auto& ps : report.series)
    s += polyline(ps.mean_cum_regret, T, ymax, policy_name(ps.policy),
                  policy_color(ps.policy), false, false);
  // One bound curve: UCB1's when present (identical across policies in
  // paired mode), otherwise the first policy's. Clipped: the bound usually
  // dwarfs the regret scale.
  const PolicySeries* bound_src = nullptr;
  for (const auto& ps : report.series)
    if (ps.policy == PolicyKind::UCB1) bound_src = &ps;
  if (!bound_src && !report.series.empty()) bound_src = &report.series.front();
  if (bound_src)
    s += polyline(bound_src->ucb1_bound, T, ymax, "ucb1_bound", "#333333", true,
                  true);
  s += legend(report, bound_src != nullptr);
  s += "</svg>\n";
  return s;
}

void emit_svg(const ExperimentReport& report, const std::string& dir) {
  write_file(dir, "fig1a.svg", fig1a_svg(report));
  write_file(dir, "fig1b.svg", fig1b_svg(report));
}

}  // namespace delegsim
