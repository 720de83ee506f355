#include "delegsim/config.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace delegsim {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Canonical output order matches the policy-stream tag order.
const PolicyKind kCanonical[] = {PolicyKind::UCB1, PolicyKind::DID,
                                 PolicyKind::EGREEDY, PolicyKind::DIG};

std::vector<PolicyKind> parse_algos(const std::vector<std::string>& names) {
  bool chosen[4] = {false, false, false, false};
  for (const auto& raw : names) {
    // Accept comma-separated lists inside one value.
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      if (item == "all") {
        chosen[0] = chosen[1] = chosen[2] = chosen[3] = true;
        continue;
      }
      const auto kind = policy_from_name(item);
      if (!kind)
        throw std::invalid_argument("unknown algorithm '" + item +
                                    "' (expected dig|did|ucb1|egreedy|all)");
      chosen[static_cast<int>(*kind)] = true;
    }
  }
  std::vector<PolicyKind> out;
  for (PolicyKind k : kCanonical)
    if (chosen[static_cast<int>(k)]) out.push_back(k);
  return out;
}

int64_t parse_int(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const int64_t v = std::stoll(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument("config key '" + key + "': expected integer, got '" +
                                value + "'");
  }
}

double parse_real(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument("config key '" + key + "': expected number, got '" +
                                value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "yes") return true;
  if (value == "0" || value == "false" || value == "no") return false;
  throw std::invalid_argument("config key '" + key + "': expected boolean, got '" +
                              value + "'");
}

}  // namespace

void apply_config_file(ExperimentConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config file " + path + " line " +
                                  std::to_string(lineno) +
                                  ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "algo") {
      cfg.policies = parse_algos({value});
    } else if (key == "runs") {
      cfg.runs = parse_int(key, value);
    } else if (key == "trials") {
      cfg.trials = parse_int(key, value);
    } else if (key == "neighbors") {
      cfg.K = static_cast<int>(parse_int(key, value));
    } else if (key == "depth") {
      cfg.D = static_cast<int>(parse_int(key, value));
    } else if (key == "seed") {
      cfg.master_seed = static_cast<uint64_t>(parse_int(key, value));
    } else if (key == "epsilon-lo") {
      cfg.epsilon_lo = parse_real(key, value);
    } else if (key == "epsilon-hi") {
      cfg.epsilon_hi = parse_real(key, value);
    } else if (key == "delta-lo") {
      cfg.delta_lo = parse_real(key, value);
    } else if (key == "delta-hi") {
      cfg.delta_hi = parse_real(key, value);
    } else if (key == "welch-window") {
      cfg.welch_window = static_cast<int>(parse_int(key, value));
    } else if (key == "welch-tol") {
      cfg.welch_tol = parse_real(key, value);
    } else if (key == "out") {
      cfg.output_dir = value;
    } else if (key == "decouple-env") {
      cfg.paired_env = !parse_bool(key, value);
    } else if (key == "threads") {
      cfg.threads = static_cast<int>(parse_int(key, value));
    } else {
      throw std::invalid_argument("config file " + path + " line " +
                                  std::to_string(lineno) + ": unknown key '" +
                                  key + "'");
    }
  }
}

CliResult parse_cli(const std::vector<std::string>& args) {
  CliResult res;
  CLI::App app{"delegation-policy simulation harness"};
  app.require_subcommand(0, 1);

  auto* run = app.add_subcommand("run", "run an experiment and emit artifacts");
  std::vector<std::string> algos;
  std::string config_path;
  int64_t runs = 0, trials = 0, seed = 0;
  int neighbors = 0, depth = 0, welch_window = 0, threads = 0;
  double eps_lo = 0, eps_hi = 0, delta_lo = 0, delta_hi = 0, welch_tol = 0;
  std::string out_dir;
  bool decouple = false;

  auto* a_algo = run->add_option("--algo", algos,
                                 "policy to run: dig|did|ucb1|egreedy|all "
                                 "(repeatable or comma-separated)");
  auto* a_runs = run->add_option("--runs", runs, "independent runs per policy");
  auto* a_trials = run->add_option("--trials", trials, "trials per run");
  auto* a_neigh = run->add_option("--neighbors", neighbors, "children per agent (K)");
  auto* a_depth = run->add_option("--depth", depth, "delegation depth (D)");
  auto* a_seed = run->add_option("--seed", seed, "master seed");
  auto* a_elo = run->add_option("--epsilon-lo", eps_lo, "epsilon range lower end");
  auto* a_ehi = run->add_option("--epsilon-hi", eps_hi, "epsilon range upper end");
  auto* a_dlo = run->add_option("--delta-lo", delta_lo, "discount range lower end");
  auto* a_dhi = run->add_option("--delta-hi", delta_hi, "discount range upper end");
  auto* a_ww = run->add_option("--welch-window", welch_window, "warm-up detection window");
  auto* a_wt = run->add_option("--welch-tol", welch_tol, "warm-up flatness tolerance");
  auto* a_out = run->add_option("--out", out_dir, "output directory");
  auto* a_cfg = run->add_option("--config", config_path,
                                "key=value config file (flags override it)");
  auto* a_dec = run->add_flag("--decouple-env", decouple,
                              "give each policy its own environment stream");
  auto* a_thr = run->add_option("--threads", threads,
                                "worker threads (1 = strictly serial)");

  auto* validate = app.add_subcommand("validate", "run the invariant suite");
  auto* oracle = app.add_subcommand("oracle",
                                    "print exact-vs-approximate Gittins index tables");

  std::vector<std::string> argv_copy(args);
  std::reverse(argv_copy.begin(), argv_copy.end());  // CLI11 consumes from the back
  try {
    app.parse(argv_copy);
  } catch (const CLI::CallForHelp& e) {
    res.action = CliResult::Action::Help;
    res.help_text = app.help();
    res.exit_code = 0;
    return res;
  } catch (const CLI::ParseError& e) {
    res.action = CliResult::Action::Error;
    res.error = e.what();
    res.exit_code = e.get_exit_code() == 0 ? 1 : e.get_exit_code();
    return res;
  }

  if (validate->parsed()) {
    res.action = CliResult::Action::Validate;
    return res;
  }
  if (oracle->parsed()) {
    res.action = CliResult::Action::Oracle;
    return res;
  }
  if (!run->parsed()) {
    res.action = CliResult::Action::Help;
    res.help_text = app.help();
    res.exit_code = 0;
    return res;
  }

  try {
    ExperimentConfig cfg;
    if (a_cfg->count() > 0) apply_config_file(cfg, config_path);
    if (a_algo->count() > 0) cfg.policies = parse_algos(algos);
    if (a_runs->count() > 0) cfg.runs = runs;
    if (a_trials->count() > 0) cfg.trials = trials;
    if (a_neigh->count() > 0) cfg.K = neighbors;
    if (a_depth->count() > 0) cfg.D = depth;
    if (a_seed->count() > 0) cfg.master_seed = static_cast<uint64_t>(seed);
    if (a_elo->count() > 0) cfg.epsilon_lo = eps_lo;
    if (a_ehi->count() > 0) cfg.epsilon_hi = eps_hi;
    if (a_dlo->count() > 0) cfg.delta_lo = delta_lo;
    if (a_dhi->count() > 0) cfg.delta_hi = delta_hi;
    if (a_ww->count() > 0) cfg.welch_window = welch_window;
    if (a_wt->count() > 0) cfg.welch_tol = welch_tol;
    if (a_out->count() > 0) cfg.output_dir = out_dir;
    if (a_dec->count() > 0) cfg.paired_env = !decouple;
    if (a_thr->count() > 0) cfg.threads = threads;

    if (cfg.output_dir.empty()) {
      res.action = CliResult::Action::Error;
      res.error = "missing output path: pass --out <dir> (or out= in the config file)";
      res.exit_code = 2;
      return res;
    }
    const auto problems = cfg.validate();
    if (!problems.empty()) {
      std::string msg = "invalid configuration:";
      for (const auto& p : problems) msg += "\n  - " + p;
      res.action = CliResult::Action::Error;
      res.error = msg;
      res.exit_code = 2;
      return res;
    }
    res.action = CliResult::Action::Run;
    res.cfg = cfg;
    return res;
  } catch (const std::exception& e) {
    res.action = CliResult::Action::Error;
    res.error = e.what();
    res.exit_code = 2;
    return res;
  }
}

}  // namespace delegsim
