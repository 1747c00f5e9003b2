#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "casimir/asymptotics.hpp"
#include "casimir/conductor_solver.hpp"
#include "casimir/dynamic_solver.hpp"
#include "casimir/geometry.hpp"
#include "casimir/static_solver.hpp"

// Parameter sweeps behind the CLI: figure reproductions and point
// evaluations, emitted as CSV.  Everything is nondimensional with
// a = 1; rows are sorted by (method, t, d/a) so the output is
// independent of the execution schedule.

namespace casimir {

struct RunConfig {
  std::string method = "conductor";  // static|dynamic|conductor|narrow-slit|plates|lifshitz
  std::vector<double> gap_ratios;
  std::vector<double> temperatures;
  PermittivityModel model = PermittivityModel::conductor();
  double tol = 1e-6;
  SumLimits limits;
  int threads = 0;  // 0: hardware concurrency
  std::string out;  // output path; empty means stdout
};

struct SweepRow {
  std::string method;
  double d_over_a = 0.0;
  double t = 0.0;
  double beta_F = 0.0;          // NaN where undefined (t = 0 rows)
  double lg_neg_betaF = 0.0;    // lg(-beta F)
  double lg_neg_betaF_t = 0.0;  // lg(-beta F t) = lg(-2 pi a F)
  int l_terms = 0;
  long long n_terms = 0;
  double wall_time = 0.0;  // seconds; telemetry only, never in the CSV
  bool ok = true;
  std::string error;
};

inline constexpr const char* kCsvSchema = "casimir.sweep.v1";

namespace detail {

inline SweepRow compute_row(const RunConfig& cfg, double d_over_a, double t) {
  SweepRow row;
  row.method = cfg.method;
  row.d_over_a = d_over_a;
  row.t = t;
  const double nan = std::nan("");
  auto clock0 = std::chrono::steady_clock::now();
  try {
    Geometry g = Geometry::from_gap_ratio(d_over_a);
    double betaF = nan, betaFt = nan;
    SeriesResult sr;
    if (cfg.method == "conductor") {
      if (t == 0.0) {
        sr = conductor_energy_T0(g, cfg.tol, cfg.limits);
        betaFt = 2.0 * M_PI * g.a * sr.value;
      } else {
        sr = conductor_free_energy(g, ThermalState(t), cfg.tol, cfg.limits);
        betaF = sr.value;
        betaFt = betaF * t;
      }
    } else if (cfg.method == "dynamic") {
      sr = mutual_free_energy(g, cfg.model, ThermalState(t), cfg.tol, cfg.limits);
      betaF = sr.value;
      betaFt = betaF * t;
    } else if (cfg.method == "static") {
      sr = static_free_energy(g, cfg.model.at_imaginary(0.0), cfg.tol, cfg.limits);
      betaF = sr.value;
      betaFt = betaF * t;
    } else if (cfg.method == "narrow-slit") {
      if (t == 0.0) {
        double E = narrow_slit_energy_T0(g, cfg.tol, cfg.limits);
        betaFt = 2.0 * M_PI * g.a * E;
      } else {
        betaF = narrow_slit_free_energy(g, ThermalState(t), cfg.tol, cfg.limits);
        betaFt = betaF * t;
      }
    } else if (cfg.method == "plates" || cfg.method == "lifshitz") {
      if (t == 0.0) throw std::invalid_argument("plate methods require t > 0");
      double beta = ThermalState(t).beta(g.a);
      double per_area =
          cfg.method == "plates"
              ? plate_free_energy_conductor(g.gap(), beta, cfg.tol, cfg.limits)
              : lifshitz_plate_free_energy(g.gap(), cfg.model, beta, cfg.tol, cfg.limits);
      betaF = per_area * g.area();  // reported on the sphere-area convention
      betaFt = betaF * t;
    } else {
      throw std::invalid_argument("unknown method: " + cfg.method);
    }
    row.beta_F = betaF;
    row.lg_neg_betaF = std::isnan(betaF) ? nan : std::log10(-betaF);
    row.lg_neg_betaF_t = std::isnan(betaFt) ? nan : std::log10(-betaFt);
    row.l_terms = sr.l_terms;
    row.n_terms = sr.n_terms;
  } catch (const std::exception& ex) {
    row.ok = false;
    row.error = ex.what();
  }
  row.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - clock0).count();
  return row;
}

inline std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace detail

// Cartesian sweep over (t, d/a); rows computed by a bounded worker pool
// and returned in sorted order regardless of completion order.
inline std::vector<SweepRow> run_sweep(const RunConfig& cfg) {
  struct Job {
    double d_over_a, t;
  };
  std::vector<Job> jobs;
  for (double t : cfg.temperatures)
    for (double d : cfg.gap_ratios) jobs.push_back({d, t});
  std::vector<SweepRow> rows(jobs.size());

  unsigned workers = cfg.threads > 0 ? unsigned(cfg.threads)
                                     : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, unsigned(std::max<size_t>(jobs.size(), 1)));
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      rows[i] = detail::compute_row(cfg, jobs[i].d_over_a, jobs[i].t);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    if (a.method != b.method) return a.method < b.method;
    if (a.t != b.t) return a.t < b.t;
    return a.d_over_a < b.d_over_a;
  });
  return rows;
}

// 12 significant digits, decimal point, fixed column set.  Failed rows
// are omitted from the data (reported on stderr by the CLI).
inline std::string to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "# schema=" << kCsvSchema << "\n";
  os << "method,d_over_a,t,beta_F,lg_neg_betaF,lg_neg_betaF_t,l_terms,n_terms\n";
  for (const auto& r : rows) {
    if (!r.ok) continue;
    os << r.method << ',' << detail::fmt12(r.d_over_a) << ',' << detail::fmt12(r.t) << ','
       << detail::fmt12(r.beta_F) << ',' << detail::fmt12(r.lg_neg_betaF) << ','
       << detail::fmt12(r.lg_neg_betaF_t) << ',' << r.l_terms << ',' << r.n_terms << "\n";
  }
  return os.str();
}

// Figure presets.  Fig. 1: lg(-beta F t) vs d/a, low-temperature family
// including the T = 0 integral path.  Fig. 2: lg(-beta F) vs d/a, high
// temperatures.  Fig. 3: lg(-beta F t) vs lg t at three fixed gaps.
inline std::vector<SweepRow> run_fig1(RunConfig cfg) {
  if (cfg.gap_ratios.empty())
    for (double d = 0.05; d <= 1.0001; d += 0.05) cfg.gap_ratios.push_back(d);
  if (cfg.temperatures.empty()) cfg.temperatures = {0.0, 0.01, 0.1, 1.0};
  cfg.method = "conductor";
  return run_sweep(cfg);
}

inline std::vector<SweepRow> run_fig2(RunConfig cfg) {
  if (cfg.gap_ratios.empty())
    for (double d = 0.05; d <= 1.0001; d += 0.05) cfg.gap_ratios.push_back(d);
  if (cfg.temperatures.empty()) cfg.temperatures = {50.0, 100.0, 200.0};
  cfg.method = "conductor";
  return run_sweep(cfg);
}

inline std::vector<SweepRow> run_fig3(RunConfig cfg) {
  if (cfg.gap_ratios.empty()) cfg.gap_ratios = {0.05, 0.075, 0.1};
  if (cfg.temperatures.empty()) {
    cfg.temperatures.push_back(0.0);
    for (double lg = -1.0; lg <= 2.5001; lg += 0.125)
      cfg.temperatures.push_back(std::pow(10.0, lg));
  }
  cfg.method = "conductor";
  return run_sweep(cfg);
}

}  // namespace casimir
