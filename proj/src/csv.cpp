#include "delegsim/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace delegsim {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
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

std::string series_csv(const ExperimentReport& report) {
  std::string out = "policy,trial,mean_prob,mean_cum_regret,ucb1_bound\n";
  for (const auto& ps : report.series) {
    const char* name = policy_name(ps.policy);
    for (size_t t = 0; t < ps.mean_prob.size(); ++t) {
      out += name;
      out += ',';
      out += std::to_string(t);
      out += ',';
      out += fmt(ps.mean_prob[t]);
      out += ',';
      out += fmt(ps.mean_cum_regret[t]);
      out += ',';
      out += fmt(ps.ucb1_bound[t]);
      out += '\n';
    }
  }
  return out;
}

std::string summary_csv(const ExperimentReport& report) {
  std::string out = "policy,final_prob,cr_lo,cr_hi,mean_rate,mean_regret\n";
  for (const auto& ps : report.series) {
    const SummaryRow& s = ps.summary;
    out += policy_name(ps.policy);
    out += ',';
    out += fmt(s.final_prob);
    out += ',';
    out += fmt(s.cr_lo);
    out += ',';
    out += fmt(s.cr_hi);
    out += ',';
    out += s.mean_rate ? fmt(*s.mean_rate) : "nan";
    out += ',';
    out += fmt(s.mean_regret);
    out += '\n';
  }
  return out;
}

std::string seeds_csv(const ExperimentReport& report) {
  std::string out = "policy,run,seed\n";
  for (const auto& ps : report.series) {
    const char* name = policy_name(ps.policy);
    for (size_t r = 0; r < ps.run_seeds.size(); ++r) {
      out += name;
      out += ',';
      out += std::to_string(r);
      out += ',';
      out += std::to_string(ps.run_seeds[r]);
      out += '\n';
    }
  }
  return out;
}

void emit_csv(const ExperimentReport& report, const std::string& dir) {
  write_file(dir, "series.csv", series_csv(report));
  write_file(dir, "summary.csv", summary_csv(report));
  write_file(dir, "seeds.csv", seeds_csv(report));
}

}  // namespace delegsim
