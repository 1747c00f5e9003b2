#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "casimir/casimir.hpp"

// casimir: concentric-sphere Casimir free energy sweeps.
//
// Subcommands: fig1, fig2, fig3 (preset sweeps), point (single
// evaluation), check (golden-value self test).  CSV on stdout or --out;
// progress and timing on stderr.  Exit codes: 0 ok, 2 bad
// configuration, 3 convergence failure, 4 golden-check failure.

namespace {

struct CliOptions {
  std::vector<double> gap_ratios;
  std::vector<double> temperatures;
  std::string epsilon = "inf";  // number or "inf"
  std::string method = "conductor";
  double tol = 1e-6;
  int lmax = 5000;
  long long nmax = 2000000;
  int threads = 0;
  std::string out;
};

void add_common(CLI::App* cmd, CliOptions& o) {
  cmd->add_option("--gap-ratio", o.gap_ratios, "gap ratio(s) d/a");
  cmd->add_option("--temperature", o.temperatures, "nondimensional temperature(s) t = 2 pi a T");
  auto last = CLI::MultiOptionPolicy::TakeLast;  // command line overrides config
  cmd->add_option("--epsilon", o.epsilon, "permittivity: a number > 1 or 'inf'")
      ->multi_option_policy(last);
  cmd->add_option("--model", o.method, "static|dynamic|conductor|narrow-slit|plates|lifshitz")
      ->multi_option_policy(last);
  cmd->add_option("--tol", o.tol, "relative tolerance")
      ->check(CLI::PositiveNumber)
      ->multi_option_policy(last);
  cmd->add_option("--lmax", o.lmax, "angular momentum cap")
      ->check(CLI::PositiveNumber)
      ->multi_option_policy(last);
  cmd->add_option("--nmax", o.nmax, "Matsubara index cap")
      ->check(CLI::PositiveNumber)
      ->multi_option_policy(last);
  cmd->add_option("--threads", o.threads, "worker threads (0 = hardware)")
      ->multi_option_policy(last);
  cmd->add_option("--out", o.out, "output CSV path (default stdout)")
      ->multi_option_policy(last);
  // handled before parsing; registered here so it shows in --help
  static std::string config_path;
  cmd->add_option("--config", config_path, "flat key=value configuration file");
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Replaces "--config FILE" with the file's key=value pairs expanded to
// "--key=value" options; explicit command-line options placed after
// --config override scalar config entries.
bool expand_config(std::vector<std::string>& args) {
  for (size_t i = 0; i < args.size(); ++i) {
    std::string path;
    size_t span = 0;
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      span = 2;
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      span = 1;
    } else {
      continue;
    }
    std::ifstream f(path);
    if (!f) {
      std::fprintf(stderr, "[casimir] cannot read config file %s\n", path.c_str());
      return false;
    }
    std::vector<std::string> expanded;
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
      ++lineno;
      std::string t = trim(line);
      if (t.empty() || t[0] == '#') continue;
      size_t eq = t.find('=');
      if (eq == std::string::npos) {
        std::fprintf(stderr, "[casimir] %s:%d: expected key=value\n", path.c_str(), lineno);
        return false;
      }
      expanded.push_back("--" + trim(t.substr(0, eq)) + "=" + trim(t.substr(eq + 1)));
    }
    args.erase(args.begin() + long(i), args.begin() + long(i + span));
    args.insert(args.begin() + long(i), expanded.begin(), expanded.end());
    i += expanded.size();
    --i;
  }
  return true;
}

casimir::RunConfig to_run_config(const CliOptions& o) {
  casimir::RunConfig cfg;
  cfg.method = o.method;
  cfg.gap_ratios = o.gap_ratios;
  cfg.temperatures = o.temperatures;
  cfg.tol = o.tol;
  cfg.limits.l_max = o.lmax;
  cfg.limits.n_max = o.nmax;
  cfg.threads = o.threads;
  cfg.out = o.out;
  if (o.epsilon == "inf") {
    cfg.model = casimir::PermittivityModel::conductor();
  } else {
    double eps = 0.0;
    try {
      eps = std::stod(o.epsilon);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--epsilon must be a number or 'inf'");
    }
    if (!(eps > 1.0)) throw CLI::ValidationError("--epsilon must exceed 1");
    cfg.model = casimir::PermittivityModel::constant(eps);
  }
  return cfg;
}

int emit(const std::vector<casimir::SweepRow>& rows, const std::string& out) {
  for (const auto& r : rows) {
    std::fprintf(stderr, "[casimir] %s d/a=%g t=%g %s (%.2fs, l<=%d, n=%lld)\n",
                 r.method.c_str(), r.d_over_a, r.t, r.ok ? "ok" : r.error.c_str(),
                 r.wall_time, r.l_terms, static_cast<long long>(r.n_terms));
  }
  std::string csv = casimir::to_csv(rows);
  if (out.empty()) {
    std::cout << csv;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::fprintf(stderr, "[casimir] cannot open %s\n", out.c_str());
      return 2;
    }
    f << csv;
  }
  for (const auto& r : rows)
    if (!r.ok) return 3;
  return 0;
}

int run_check(bool fast) {
  auto results = casimir::run_golden_checks(!fast);
  bool all = true;
  for (const auto& c : results) {
    std::printf("%-4s %2d  %s\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str());
    if (!c.detail.empty()) std::printf("         %s\n", c.detail.c_str());
    all = all && c.pass;
  }
  return all ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir free energy of concentric spherical surfaces"};
  app.require_subcommand(1);

  CliOptions o1, o2, o3, op;
  auto* fig1 = app.add_subcommand("fig1", "low-temperature sweep over d/a");
  add_common(fig1, o1);
  auto* fig2 = app.add_subcommand("fig2", "high-temperature sweep over d/a");
  add_common(fig2, o2);
  auto* fig3 = app.add_subcommand("fig3", "temperature sweep at fixed gaps");
  add_common(fig3, o3);
  auto* point = app.add_subcommand("point", "single (d/a, t) evaluation");
  add_common(point, op);
  auto* check = app.add_subcommand("check", "golden-value self test");
  bool fast = false;
  check->add_flag("--fast", fast, "skip the slow term-count check");

  std::vector<std::string> args(argv + 1, argv + argc);
  if (!expand_config(args)) return 2;
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(fast);
    if (fig1->parsed()) return emit(casimir::run_fig1(to_run_config(o1)), o1.out);
    if (fig2->parsed()) return emit(casimir::run_fig2(to_run_config(o2)), o2.out);
    if (fig3->parsed()) return emit(casimir::run_fig3(to_run_config(o3)), o3.out);
    if (point->parsed()) {
      if (op.gap_ratios.empty() || op.temperatures.empty()) {
        std::fprintf(stderr, "[casimir] point requires --gap-ratio and --temperature\n");
        return 2;
      }
      return emit(casimir::run_sweep(to_run_config(op)), op.out);
    }
  } catch (const casimir::NonConvergence& e) {
    std::fprintf(stderr, "[casimir] convergence failure: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "[casimir] configuration error: %s\n", e.what());
    return 2;
  } catch (const CLI::Error& e) {
    std::fprintf(stderr, "[casimir] %s\n", e.what());
    return 2;
  }
  return 2;
}
