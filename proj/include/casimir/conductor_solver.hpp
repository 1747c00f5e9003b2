#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "casimir/geometry.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/riccati.hpp"
#include "casimir/series.hpp"

// Field-theoretic route for perfectly conducting walls at r = a, b:
// free energy, T = 0 energy, and the interaction surface force at r = b.

namespace casimir {

// TE ratio rF = (s_l(x)/e_l(x)) (e_l(y)/s_l(y)) and TM ratio rG with
// argument-derivatives; both lie in (0, 1) for 0 < x < y.
struct ConductorModeRatios {
  double rF;
  double rG;
  double x;
  double y;
};

inline ConductorModeRatios conductor_ratios(int l, double x, double y) {
  if (!(0.0 < x && x < y)) throw std::invalid_argument("conductor_ratios: 0 < x < y");
  ScaledRiccati sx = riccati_s(l, x), ex = riccati_e(l, x);
  ScaledRiccati sy = riccati_s(l, y), ey = riccati_e(l, y);
  double rF = ((sx.val() * ey.val()) / (ex.val() * sy.val())).value();
  double rG = ((sx.der() * ey.der()) / (ex.der() * sy.der())).value();
  return {rF, rG, x, y};
}

struct ForceResult {
  double f_int;  // interaction surface force density at r = b, per unit area
  SeriesResult convergence;
};

// sum_l (2l+1) ln(1 - sigma_l): the analytic n = 0 contribution where
// both modes reduce to the same small-argument ratio.
inline double n0_term(const Geometry& g, double tol = 1e-13, const SumLimits& lim = {}) {
  KahanSum sum;
  double rho = g.radius_ratio() * g.radius_ratio();
  for (int l = 1; l <= lim.l_max; ++l) {
    sum.add((2.0 * l + 1.0) * std::log1p(-g.sigma(l)));
    double sigL = g.sigma(l);
    double tail = sigL * ((2.0 * l + 1.0) * rho / (1.0 - rho) +
                          2.0 * rho / ((1.0 - rho) * (1.0 - rho))) /
                  (1.0 - g.sigma(l + 1));
    if (l >= 2 && tail <= tol * std::fabs(sum.get())) return sum.get();
  }
  throw NonConvergence("n0_term: l sum not converged within l_max");
}

namespace detail {

// sum_l nu ln[(1-rF)(1-rG)] at fixed dimensionless x (y = x b/a).
// Converged to relative 0.1*tol internally or to the absolute floor,
// whichever is looser; counters accumulate into out.  The floor matters
// at large x, where every term is negligible for the caller but the
// decay in l is too slow for a purely relative rule.
inline double conductor_l_sum(const Geometry& g, double x, double tol, const SumLimits& lim,
                              SeriesResult& out, int& l_guess, double abs_floor = 0.0) {
  double y = x * g.b / g.a;
  // s/e grows at least like e^{2x}, so rF, rG <= exp(-2(y-x)): beyond
  // this point the whole sum is far below any caller's floor
  if (y - x > 60.0) return 0.0;
  for (;;) {
    int cap = std::min(l_guess, lim.l_max);
    auto sx = riccati_s_table(cap, x);
    auto ex = riccati_e_table(cap, x);
    auto sy = riccati_s_table(cap, y);
    auto ey = riccati_e_table(cap, y);
    KahanSum part;
    double prev = 0.0;
    for (int l = 1; l <= cap; ++l) {
      double rF = ((sx[l].val() * ey[l].val()) / (ex[l].val() * sy[l].val())).value();
      double rG = ((sx[l].der() * ey[l].der()) / (ex[l].der() * sy[l].der())).value();
      double term = (l + 0.5) * (std::log1p(-rF) + std::log1p(-rG));
      part.add(term);
      ++out.term_evals;
      double at = std::fabs(term);
      if (l >= 3) {
        if (at == 0.0 && prev == 0.0) {
          out.l_terms = std::max(out.l_terms, l);
          l_guess = std::max(32, l + 8);
          return part.get();
        }
        double q = prev > 0.0 ? at / prev : 0.0;
        double stop = std::max(0.1 * tol * std::fabs(part.get()), abs_floor);
        if (q < 1.0 && at * q / (1.0 - q) <= stop) {
          out.l_terms = std::max(out.l_terms, l);
          l_guess = std::max(32, l + 8);
          return part.get();
        }
      }
      prev = at;
    }
    if (cap >= lim.l_max)
      throw NonConvergence("conductor l sum hit l_max at x = " + std::to_string(x));
    l_guess = 2 * cap;
  }
}

}  // namespace detail

// beta F = 2 sum'_{n>=0} sum_l nu ln[(1-rF)(1-rG)], n = 0 analytic.
inline SeriesResult conductor_free_energy(const Geometry& g, const ThermalState& th,
                                          double tol, const SumLimits& lim = {}) {
  if (!(th.t > 0.0)) throw std::invalid_argument("conductor_free_energy: t > 0 required");
  if (!(tol > 0.0)) throw std::invalid_argument("conductor_free_energy: tol > 0");
  SeriesResult out;
  out.tolerance = tol;
  KahanSum total;
  total.add(n0_term(g, 0.1 * tol, lim));
  // the zero-frequency part bounds the total from below in magnitude
  double floor = 1e-4 * tol * std::fabs(total.get());
  int l_guess = 32;
  int consec = 0;
  for (long long n = 1; n <= lim.n_max; ++n) {
    double x = double(n) * th.t;  // zeta_n * a
    double term = 2.0 * detail::conductor_l_sum(g, x, tol, lim, out, l_guess, floor);
    total.add(term);
    out.n_terms = n + 1;
    if (std::fabs(term) <= tol * std::fabs(total.get())) {
      if (++consec >= 3) {
        out.tail_estimate = std::fabs(term);
        out.value = total.get();
        return out;
      }
    } else {
      consec = 0;
    }
  }
  throw NonConvergence("conductor_free_energy: n sum not converged within n_max");
}

// T = 0:  E = (1/(pi a)) Int_0^inf dx sum_l nu ln[(1-rF)(1-rG)].
inline SeriesResult conductor_energy_T0(const Geometry& g, double tol,
                                        const SumLimits& lim = {}) {
  if (!(tol > 0.0)) throw std::invalid_argument("conductor_energy_T0: tol > 0");
  SeriesResult out;
  out.tolerance = tol;
  int l_guess = 32;
  double floor = 1e-4 * tol * std::fabs(n0_term(g, 1e-10, lim));
  auto integrand = [&](double x) {
    return detail::conductor_l_sum(g, x, tol, lim, out, l_guess, floor);
  };
  QuadResult q = integrate_semi_infinite(integrand, 0.0, 1.0 / g.xi(), tol);
  out.value = q.value / (M_PI * g.a);
  out.tail_estimate = q.abs_error / (M_PI * g.a);
  return out;
}

// f_b^int = -1/(2 pi b^2 beta) sum'_n sum_l nu d/db ln[(1-rF)(1-rG)],
// with the b-derivative taken analytically through y = K b.
inline ForceResult conductor_force(const Geometry& g, const ThermalState& th, double tol,
                                   const SumLimits& lim = {}) {
  if (!(th.t > 0.0)) throw std::invalid_argument("conductor_force: t > 0 required");
  SeriesResult out;
  out.tolerance = tol;
  KahanSum total;  // accumulates sum'_n sum_l nu d/db ln[...]  (positive)

  {  // n = 0: d/db of sum_l (2l+1) ln(1 - sigma_l), half weight
    KahanSum s0;
    for (int l = 1; l <= lim.l_max; ++l) {
      double sig = g.sigma(l);
      double term = 0.5 * (2.0 * l + 1.0) * (2.0 * l + 1.0) * sig / (g.b * (1.0 - sig));
      s0.add(term);
      ++out.term_evals;
      if (l >= 2 && term <= 0.1 * tol * s0.get()) break;
    }
    total.add(s0.get());
  }

  double floor = 1e-4 * tol * std::fabs(total.get());
  int consec = 0;
  bool converged = false;
  for (long long n = 1; n <= lim.n_max && !converged; ++n) {
    double x = double(n) * th.t;
    double y = x * g.b / g.a;
    double K = x / g.a;
    if (y - x > 60.0) {
      if (++consec >= 3) break;
      continue;
    }
    int cap = std::max(64, out.l_terms + 16);
    double n_term = 0.0;
    for (;;) {
      cap = std::min(cap, lim.l_max);
      auto sx = riccati_s_table(cap, x);
      auto ex = riccati_e_table(cap, x);
      auto sy = riccati_s_table(cap, y);
      auto ey = riccati_e_table(cap, y);
      KahanSum part;
      double prev = 0.0;
      bool done = false;
      for (int l = 1; l <= cap; ++l) {
        double rF = ((sx[l].val() * ey[l].val()) / (ex[l].val() * sy[l].val())).value();
        double rG = ((sx[l].der() * ey[l].der()) / (ex[l].der() * sy[l].der())).value();
        double s_ratio = sy[l].d_mantissa / sy[l].mantissa;    // s'(y)/s(y)
        double e_ratio = ey[l].d_mantissa / ey[l].mantissa;    // e'(y)/e(y)
        double curv = 1.0 + double(l) * (l + 1.0) / (y * y);
        double s2_ratio = curv * sy[l].mantissa / sy[l].d_mantissa;  // s''/s'
        double e2_ratio = curv * ey[l].mantissa / ey[l].d_mantissa;  // e''/e'
        double term = (l + 0.5) * K *
                      (rF * (s_ratio - e_ratio) / (1.0 - rF) +
                       rG * (s2_ratio - e2_ratio) / (1.0 - rG));
        part.add(term);
        ++out.term_evals;
        out.l_terms = std::max(out.l_terms, l);
        double at = std::fabs(term);
        if (l >= 3) {
          if (at == 0.0 && prev == 0.0) {
            done = true;
            break;
          }
          double q = prev > 0.0 ? at / prev : 0.0;
          double stop = std::max(0.1 * tol * std::fabs(part.get()), floor);
          if (q < 1.0 && at * q / (1.0 - q) <= stop) {
            done = true;
            break;
          }
        }
        prev = at;
      }
      if (done) {
        n_term = part.get();
        break;
      }
      if (cap >= lim.l_max)
        throw NonConvergence("conductor_force: l sum hit l_max at n = " + std::to_string(n));
      cap *= 2;
    }
    total.add(n_term);
    out.n_terms = n + 1;
    if (std::fabs(n_term) <= tol * std::fabs(total.get())) {
      if (++consec >= 3) converged = true;
    } else {
      consec = 0;
    }
  }
  if (!converged && out.n_terms >= lim.n_max)
    throw NonConvergence("conductor_force: n sum not converged within n_max");

  double beta = th.beta(g.a);
  out.value = -total.get() / (2.0 * M_PI * g.b * g.b * beta);
  return {out.value, out};
}

}  // namespace casimir
