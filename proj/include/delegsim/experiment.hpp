#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "delegsim/metrics.hpp"
#include "delegsim/policies.hpp"

namespace delegsim {

struct ExperimentConfig {
  std::vector<PolicyKind> policies{PolicyKind::UCB1, PolicyKind::DID,
                                   PolicyKind::EGREEDY, PolicyKind::DIG};
  int64_t runs = 100;
  int64_t trials = 1000;
  int K = 5;
  int D = 4;
  double epsilon_lo = 0.05;
  double epsilon_hi = 0.1;
  double delta_lo = 0.8;
  double delta_hi = 1.0;  // exclusive
  uint64_t master_seed = 7;
  int welch_window = 50;
  double welch_tol = 0.025;
  std::string output_dir;
  // Paired mode shares one environment stream (competences and outcome noise)
  // across policies at equal run index; decoupled mode gives each policy its
  // own environment stream.
  bool paired_env = true;
  int threads = 0;  // 0 = runtime default, 1 = strictly serial

  // Empty when valid; otherwise one message per violated constraint.
  std::vector<std::string> validate() const;
};

struct PolicySeries {
  PolicyKind policy = PolicyKind::UCB1;
  std::vector<double> mean_prob;        // ensemble success probability per trial
  std::vector<double> mean_cum_regret;  // ensemble cumulative regret per trial
  std::vector<double> ucb1_bound;       // mean theoretical bound per trial
  double mean_mu_star = 0.0;
  int64_t welch = 0;                    // warm-up cutoff of mean_prob
  SummaryRow summary;
  std::vector<uint64_t> run_seeds;      // policy-stream seed per run
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<PolicySeries> series;  // one per configured policy, in order
};

// Runs every configured (policy, run) pair: derives the run's streams from
// (master_seed, tag, run), builds the network and competences, plays `trials`
// trials, then aggregates ensembles and summaries. Runs are independent and
// execute in parallel when OpenMP is enabled; aggregation is sequential in a
// fixed order, so the report is identical for identical configs regardless
// of thread count. Throws std::invalid_argument on config violations.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

}  // namespace delegsim
