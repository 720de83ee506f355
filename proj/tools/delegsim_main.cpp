#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "delegsim/config.hpp"
#include "delegsim/csv.hpp"
#include "delegsim/dig.hpp"
#include "delegsim/environment.hpp"
#include "delegsim/experiment.hpp"
#include "delegsim/gittins_oracle.hpp"
#include "delegsim/svg.hpp"

using namespace delegsim;

namespace {

int do_run(const ExperimentConfig& cfg) {
  try {
    const ExperimentReport report = run_experiment(cfg);
    emit_csv(report, cfg.output_dir);
    emit_svg(report, cfg.output_dir);
    std::printf("policy    final_prob  95%% CR              mean_rate  mean_regret\n");
    for (const auto& ps : report.series) {
      const SummaryRow& s = ps.summary;
      std::printf("%-9s %.4f      [%.4f, %.4f]    %-10s %.3f\n",
                  policy_name(ps.policy), s.final_prob, s.cr_lo, s.cr_hi,
                  s.mean_rate ? std::to_string(*s.mean_rate).substr(0, 7).c_str()
                              : "n/a",
                  s.mean_regret);
    }
    std::printf("artifacts written to %s\n", cfg.output_dir.c_str());
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

int do_oracle() {
  std::printf("Gittins index: closed-form approximation vs exact DP oracle\n");
  std::printf("tolerance band 0.07; rows above it are marked\n\n");
  int violations = 0;
  for (double delta : {0.8, 0.9, 0.95}) {
    const int horizon = delta <= 0.8 ? 100 : (delta <= 0.9 ? 200 : 300);
    const DiscountParams d = DiscountParams::from_delta(delta);
    std::printf("delta = %.2f (horizon %d)\n", delta, horizon);
    std::printf("%5s %5s %10s %10s %10s\n", "alpha", "beta", "approx", "exact",
                "|diff|");
    for (int a = 1; a <= 10; ++a) {
      for (int b = 1; b <= 10; ++b) {
        const BeliefState bel{static_cast<double>(a), static_cast<double>(b)};
        const double approx = gittins_approx(bel, d);
        const double exact = exact_gittins_bernoulli(bel, d, horizon);
        const double diff = std::fabs(approx - exact);
        const bool bad = diff > 0.07;
        violations += bad ? 1 : 0;
        std::printf("%5d %5d %10.6f %10.6f %10.6f%s\n", a, b, approx, exact,
                    diff, bad ? "  <-- above tolerance" : "");
      }
    }
    std::printf("\n");
  }
  std::printf("entries above tolerance: %d\n", violations);
  return 0;
}

bool check(const char* name, bool ok, int& failures) {
  std::printf("  [%s] %s\n", ok ? "ok" : "FAIL", name);
  if (!ok) ++failures;
  return ok;
}

// Fast subset of the library's invariants, exercised on small configurations.
int do_validate() {
  int failures = 0;
  std::printf("invariant suite\n");

  {
    const auto n1 = generate_network(5, 4);
    const auto n2 = generate_network(5, 4);
    check("network generation is pure", n1.n_agents == 781 &&
                                            n1.level_offset == n2.level_offset,
          failures);
    bool counts_ok = true;
    for (int64_t a = 0; a < n1.n_agents; ++a) {
      const auto nb = n1.neighbors(a);
      const int expect = n1.depth_of(a) < n1.D ? n1.K : 0;
      if (static_cast<int>(nb.size()) != expect) counts_ok = false;
    }
    check("neighbor counts match depth", counts_ok, failures);
  }
  {
    Rng r1(42), r2(42);
    const auto net = generate_network(3, 3);
    const auto t1 = sample_competences(net, r1);
    const auto t2 = sample_competences(net, r2);
    check("competence sampling deterministic", t1 == t2, failures);
  }
  {
    BeliefState b;
    b = update_belief(b, true);
    const bool conj1 = b.alpha == 2.0 && b.beta == 1.0;
    for (int i = 0; i < 9; ++i) b = update_belief(b, i % 2 == 0);
    check("belief conjugacy (counts accumulate)", conj1 && b.count() == 12.0,
          failures);
  }
  {
    check("psi spot values",
          std::fabs(psi(0.125) - 0.25) < 1e-12 &&
              std::fabs(psi(3.16374) - 0.483825) < 1e-6,
          failures);
  }
  {
    ExperimentConfig cfg;
    cfg.runs = 3;
    cfg.trials = 60;
    cfg.K = 2;
    cfg.D = 2;
    cfg.welch_window = 5;
    const auto r1 = run_experiment(cfg);
    const auto r2 = run_experiment(cfg);
    check("small experiment byte-identical",
          series_csv(r1) == series_csv(r2) && summary_csv(r1) == summary_csv(r2),
          failures);
    bool lens = true;
    for (const auto& ps : r1.series)
      lens = lens && static_cast<int64_t>(ps.mean_prob.size()) == cfg.trials;
    check("series lengths equal trials", lens, failures);
  }
  {
    const auto net = generate_network(3, 3);
    Rng env(derive_seed(9, 0, 0)), pol(derive_seed(9, 4, 0));
    const auto theta = sample_competences(net, env);
    DigState st = dig_init(net, pol);
    int64_t traversals = 0;
    bool bounded = true;
    for (int t = 0; t < 400; ++t) {
      const auto ch = dig_trial(st, net, theta, pol, env);
      bounded = bounded && ch.path.size() <= static_cast<size_t>(net.D) + 1;
      traversals += static_cast<int64_t>(ch.path.size()) - 1;
    }
    double mass = 0.0;
    for (int64_t m = 1; m < net.n_agents; ++m)
      mass += st.edge_beliefs[m].count() - 2.0;
    check("chain length bounded and edge-belief mass conserved",
          bounded && static_cast<int64_t>(mass) == traversals, failures);
  }

  std::printf(failures == 0 ? "all invariants hold\n"
                            : "%d invariant(s) violated\n",
              failures);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const CliResult cli = parse_cli(args);
  switch (cli.action) {
    case CliResult::Action::Run:
      return do_run(cli.cfg);
    case CliResult::Action::Validate:
      return do_validate();
    case CliResult::Action::Oracle:
      return do_oracle();
    case CliResult::Action::Help:
      std::printf("%s", cli.help_text.c_str());
      return cli.exit_code;
    case CliResult::Action::Error:
    default:
      std::fprintf(stderr, "error: %s\n", cli.error.c_str());
      return cli.exit_code == 0 ? 1 : cli.exit_code;
  }
}
