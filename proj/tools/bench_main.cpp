#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <thread>

#include "delegsim/csv.hpp"
#include "delegsim/experiment.hpp"

using namespace delegsim;
using Clock = std::chrono::steady_clock;

// Timing and equivalence check: the parallel schedule must reproduce the
// serial run byte for byte, since every (policy, run) cell owns its streams.
int main() {
  ExperimentConfig cfg;
  cfg.runs = 40;
  cfg.trials = 500;
  cfg.master_seed = 12345;

  cfg.threads = 1;
  const auto t0 = Clock::now();
  const ExperimentReport serial = run_experiment(cfg);
  const auto t1 = Clock::now();

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  cfg.threads = static_cast<int>(hw);
  const auto t2 = Clock::now();
  const ExperimentReport parallel = run_experiment(cfg);
  const auto t3 = Clock::now();

  const double serial_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  const double parallel_ms =
      std::chrono::duration<double, std::milli>(t3 - t2).count();

  const bool identical = series_csv(serial) == series_csv(parallel) &&
                         summary_csv(serial) == summary_csv(parallel) &&
                         seeds_csv(serial) == seeds_csv(parallel);

  std::printf("runs=%" PRId64 " trials=%" PRId64 " policies=%zu\n", cfg.runs,
              cfg.trials, cfg.policies.size());
  std::printf("serial   (1 thread)  : %9.1f ms\n", serial_ms);
  std::printf("parallel (%2u threads): %9.1f ms\n", hw, parallel_ms);
  std::printf("speedup              : %.2fx\n", serial_ms / parallel_ms);
  std::printf("outputs identical    : %s\n", identical ? "yes" : "NO");
  return identical ? 0 : 1;
}
