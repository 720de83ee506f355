#include "delegsim/experiment.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "delegsim/dig.hpp"
#include "delegsim/environment.hpp"

namespace delegsim {

namespace {

constexpr uint64_t kEnvTag = 0;
constexpr uint64_t kDecoupledEnvBase = 16;

struct RunResult {
  std::vector<uint8_t> outcomes;
  double mu_star = 0.0;
  GapProfile gaps;
  uint64_t policy_seed = 0;
};

RunResult run_one(const ExperimentConfig& cfg, const DelegationNetwork& net,
                  PolicyKind kind, int64_t run) {
  RunResult res;
  const uint64_t tag = policy_tag(kind);
  const uint64_t env_tag = cfg.paired_env ? kEnvTag : kDecoupledEnvBase + tag;
  Rng env_rng(derive_seed(cfg.master_seed, env_tag, static_cast<uint64_t>(run)));
  res.policy_seed = derive_seed(cfg.master_seed, tag, static_cast<uint64_t>(run));
  Rng policy_rng(res.policy_seed);

  const std::vector<double> theta = sample_competences(net, env_rng);
  res.mu_star = mu_star_of(net, theta);
  res.gaps = gap_profile_of(net, theta);
  res.outcomes.resize(cfg.trials);

  if (kind == PolicyKind::DIG) {
    DigState st = dig_init(net, policy_rng);
    for (int64_t t = 0; t < cfg.trials; ++t) {
      const DelegationChain ch = dig_trial(st, net, theta, policy_rng, env_rng);
      res.outcomes[t] = ch.outcome ? 1 : 0;
    }
  } else {
    double epsilon = 0.0;
    double delta = 0.5 * (cfg.delta_lo + cfg.delta_hi);
    if (kind == PolicyKind::DID)
      delta = policy_rng.uniform(cfg.delta_lo, cfg.delta_hi);
    if (kind == PolicyKind::EGREEDY)
      epsilon = policy_rng.uniform(cfg.epsilon_lo, cfg.epsilon_hi);
    BanditPolicyState st = make_bandit_state(net, epsilon, delta);
    for (int64_t t = 0; t < cfg.trials; ++t) {
      const DelegationChain ch =
          bandit_trial(kind, st, net, theta, policy_rng, env_rng);
      res.outcomes[t] = ch.outcome ? 1 : 0;
    }
  }
  return res;
}

}  // namespace

std::vector<std::string> ExperimentConfig::validate() const {
  std::vector<std::string> problems;
  if (runs < 1) problems.push_back("runs must be >= 1");
  if (trials < 1) problems.push_back("trials must be >= 1");
  if (K < 1) problems.push_back("neighbors (K) must be >= 1");
  if (D < 0) problems.push_back("depth (D) must be >= 0");
  if (K >= 1 && D >= 0 && complete_tree_size(K, D) > kNodeCap)
    problems.push_back("network size exceeds the node cap of " +
                       std::to_string(kNodeCap));
  if (!(epsilon_lo >= 0.05 && epsilon_hi <= 0.1 && epsilon_lo <= epsilon_hi))
    problems.push_back("epsilon range must satisfy 0.05 <= lo <= hi <= 0.1");
  if (!(delta_lo >= 0.8 && delta_hi <= 1.0 && delta_lo < delta_hi))
    problems.push_back("delta range must satisfy 0.8 <= lo < hi <= 1.0");
  if (welch_window < 1) problems.push_back("welch-window must be >= 1");
  if (!(welch_tol > 0.0)) problems.push_back("welch-tol must be > 0");
  if (threads < 0) problems.push_back("threads must be >= 0");
  for (size_t i = 0; i < policies.size(); ++i)
    for (size_t k = i + 1; k < policies.size(); ++k)
      if (policies[i] == policies[k]) {
        problems.push_back("duplicate policy in --algo list");
        i = policies.size();
        break;
      }
  return problems;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  const auto problems = cfg.validate();
  if (!problems.empty()) {
    std::string msg = "invalid experiment config:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw std::invalid_argument(msg);
  }

  const DelegationNetwork net = generate_network(cfg.K, cfg.D);
  const int64_t n_pol = static_cast<int64_t>(cfg.policies.size());
  const int64_t total = n_pol * cfg.runs;
  std::vector<RunResult> results(total);

#ifdef _OPENMP
  const int nt = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt) if (nt > 1)
#endif
  for (int64_t idx = 0; idx < total; ++idx) {
    const PolicyKind kind = cfg.policies[idx / cfg.runs];
    const int64_t run = idx % cfg.runs;
    results[idx] = run_one(cfg, net, kind, run);
  }

  ExperimentReport report;
  report.config = cfg;
  report.series.resize(n_pol);
  const int64_t T = cfg.trials;
  const int64_t R = cfg.runs;

  for (int64_t p = 0; p < n_pol; ++p) {
    PolicySeries& ps = report.series[p];
    ps.policy = cfg.policies[p];
    ps.mean_prob.assign(T, 0.0);
    ps.mean_cum_regret.assign(T, 0.0);
    ps.ucb1_bound.assign(T, 0.0);
    ps.run_seeds.resize(R);

    std::vector<std::vector<uint8_t>> outcomes(R);
    std::vector<double> final_regrets(R);
    std::vector<double> rewards(T);
    for (int64_t r = 0; r < R; ++r) {
      const RunResult& res = results[p * R + r];
      ps.run_seeds[r] = res.policy_seed;
      ps.mean_mu_star += res.mu_star / static_cast<double>(R);
      for (int64_t t = 0; t < T; ++t) rewards[t] = res.outcomes[t];
      const std::vector<double> cum = cumulative_regret(rewards, res.mu_star);
      for (int64_t t = 0; t < T; ++t) {
        ps.mean_prob[t] += rewards[t] / static_cast<double>(R);
        ps.mean_cum_regret[t] += cum[t] / static_cast<double>(R);
        ps.ucb1_bound[t] +=
            ucb1_regret_bound(res.gaps, t + 1) / static_cast<double>(R);
      }
      final_regrets[r] = cum[T - 1];
      outcomes[r] = std::move(results[p * R + r].outcomes);
    }

    std::vector<double> rates;
    ps.welch = T;
    if (cfg.welch_window < T) {
      ps.welch = welch_cutoff(ps.mean_prob, cfg.welch_window, cfg.welch_tol);
      if (T >= 5) {
        const int64_t cutoff = std::clamp<int64_t>(ps.welch, 3, T - 2);
        const auto rate = convergence_rate(error_series(ps.mean_prob), cutoff);
        if (rate) rates.push_back(*rate);
      }
    }
    ps.summary = summarize(ps.policy, outcomes, final_regrets, rates);
  }
  return report;
}

}  // namespace delegsim
