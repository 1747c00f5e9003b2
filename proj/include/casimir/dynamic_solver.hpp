#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "casimir/geometry.hpp"
#include "casimir/riccati.hpp"
#include "casimir/series.hpp"
#include "casimir/static_solver.hpp"

// Finite-temperature mutual free energy for arbitrary real permittivity
// via the TM/TE mode eigenvalues.  Every bracket is built in scaled
// arithmetic; radial derivatives are wavenumber times the
// argument-derivative, with sqrt(eps) carried by the in-medium
// wavenumber.  The common factor zeta cancels between numerator and
// denominator and is dropped.

namespace casimir {

namespace detail {

struct ModePair {
  double tm;
  double te;
};

// Eigenvalues from the eight function values at one l.  se = sqrt(eps)
// is the ratio of in-medium to vacuum wavenumber.
inline ModePair mode_eigenvalues(double eps, double se, const ScaledRiccati& sx,
                                 const ScaledRiccati& sxe, const ScaledRiccati& ex,
                                 const ScaledRiccati& sy, const ScaledRiccati& ey,
                                 const ScaledRiccati& eye) {
  Scaled n1 = eps * (sx.der() * sxe.val()) - se * (sx.val() * sxe.der());
  Scaled n2 = eps * (ey.der() * eye.val()) - se * (ey.val() * eye.der());
  Scaled d1 = eps * (ex.der() * sxe.val()) - se * (ex.val() * sxe.der());
  Scaled d2 = eps * (eye.val() * sy.der()) - se * (eye.der() * sy.val());
  double tm = ((n1 * n2) / (d1 * d2)).value();

  Scaled m1 = (sx.der() * sxe.val()) - se * (sx.val() * sxe.der());
  Scaled m2 = (ey.der() * eye.val()) - se * (ey.val() * eye.der());
  Scaled e1 = (ex.der() * sxe.val()) - se * (ex.val() * sxe.der());
  Scaled e2 = (eye.val() * sy.der()) - se * (eye.der() * sy.val());
  double te = ((m1 * m2) / (e1 * e2)).value();
  return {tm, te};
}

// conductor limit: pure Riccati-Bessel ratio products
inline ModePair conductor_mode_pair(const ScaledRiccati& sx, const ScaledRiccati& ex,
                                    const ScaledRiccati& sy, const ScaledRiccati& ey) {
  double tm = ((sx.der() * ey.der()) / (ex.der() * sy.der())).value();
  double te = ((sx.val() * ey.val()) / (ex.val() * sy.val())).value();
  return {tm, te};
}

}  // namespace detail

// TM eigenvalue lambda_{eps l} at Matsubara frequency zeta > 0.
inline double tm_eigenvalue(const Geometry& g, double eps, double zeta, int l) {
  if (!(eps > 1.0)) throw std::invalid_argument("tm_eigenvalue: eps > 1 required");
  if (!(zeta > 0.0)) throw std::invalid_argument("tm_eigenvalue: zeta > 0 (n = 0 is analytic)");
  double se = std::sqrt(eps);
  double x = zeta * g.a, y = zeta * g.b;
  return detail::mode_eigenvalues(eps, se, riccati_s(l, x), riccati_s(l, se * x),
                                  riccati_e(l, x), riccati_s(l, y), riccati_e(l, y),
                                  riccati_e(l, se * y))
      .tm;
}

// TE eigenvalue lambda_l; vanishes as zeta -> 0.
inline double te_eigenvalue(const Geometry& g, double eps, double zeta, int l) {
  if (!(eps > 1.0)) throw std::invalid_argument("te_eigenvalue: eps > 1 required");
  if (!(zeta > 0.0)) throw std::invalid_argument("te_eigenvalue: zeta > 0 (n = 0 is analytic)");
  double se = std::sqrt(eps);
  double x = zeta * g.a, y = zeta * g.b;
  return detail::mode_eigenvalues(eps, se, riccati_s(l, x), riccati_s(l, se * x),
                                  riccati_e(l, x), riccati_s(l, y), riccati_e(l, y),
                                  riccati_e(l, se * y))
      .te;
}

// Handling of the n = 0 term.  StaticFirst takes omega -> 0 before any
// eps -> infinity limit (TE contributes nothing); ConductorFirst mimics
// the field-theoretic order where both modes contribute equally.
enum class N0Convention { StaticFirst, ConductorFirst };

// beta F = (1/2) sum_K sum_l (2l+1) [ln(1-lambda_TM) + ln(1-lambda_TE)],
// realized as the analytic n = 0 term at half weight plus the two-sided
// n >= 1 terms at full weight.
inline SeriesResult mutual_free_energy(const Geometry& g, const PermittivityModel& pm,
                                       const ThermalState& th, double tol,
                                       const SumLimits& lim = {},
                                       N0Convention n0 = N0Convention::StaticFirst) {
  if (!(tol > 0.0)) throw std::invalid_argument("mutual_free_energy: tol > 0");
  if (!(th.t > 0.0))
    throw std::invalid_argument("mutual_free_energy: t > 0 (use conductor_energy_T0 at T = 0)");

  SeriesResult out;
  out.tolerance = tol;

  double eps0 = pm.at_imaginary(0.0);
  SeriesResult stat = static_free_energy(g, eps0, 0.1 * tol, lim);
  KahanSum total;
  total.add(stat.value);
  if (n0 == N0Convention::ConductorFirst) total.add(stat.value);
  out.term_evals += stat.term_evals;
  out.l_terms = stat.l_terms;

  const bool cond = pm.is_conductor();
  int l_guess = 32;
  int consec = 0;
  for (long long n = 1; n <= lim.n_max; ++n) {
    double zeta = th.zeta(n, g.a);
    double x = zeta * g.a, y = zeta * g.b;
    double eps = pm.at_imaginary(zeta);
    double se = std::sqrt(eps);

    double n_term = 0.0;
    int l_used = 0;
    for (;;) {
      int cap = std::min(l_guess, lim.l_max);
      auto sx = riccati_s_table(cap, x);
      auto ex = riccati_e_table(cap, x);
      auto sy = riccati_s_table(cap, y);
      auto ey = riccati_e_table(cap, y);
      std::vector<ScaledRiccati> sxe, eye;
      if (!cond) {
        sxe = riccati_s_table(cap, se * x);
        eye = riccati_e_table(cap, se * y);
      }

      KahanSum part;
      double prev = 0.0;
      bool done = false;
      for (int l = 1; l <= cap; ++l) {
        detail::ModePair mp =
            cond ? detail::conductor_mode_pair(sx[l], ex[l], sy[l], ey[l])
                 : detail::mode_eigenvalues(eps, se, sx[l], sxe[l], ex[l], sy[l], ey[l],
                                            eye[l]);
        double term = (2.0 * l + 1.0) * (std::log1p(-mp.tm) + std::log1p(-mp.te));
        part.add(term);
        ++out.term_evals;
        l_used = l;
        double at = std::fabs(term);
        if (l >= 3) {
          double ref = tol * std::fabs(total.get() + part.get());
          if (at == 0.0 && prev == 0.0) {
            done = true;
            break;
          }
          double q = prev > 0.0 ? at / prev : 0.0;
          if (q < 1.0) {
            double tail = at * q / (1.0 - q);
            if (tail <= 0.1 * ref && at <= 0.1 * ref) {
              done = true;
              break;
            }
          }
        }
        prev = at;
      }
      if (done) {
        n_term = part.get();
        break;
      }
      if (cap >= lim.l_max)
        throw NonConvergence("mutual_free_energy: l sum hit l_max at n = " + std::to_string(n));
      l_guess = 2 * cap;
    }

    total.add(n_term);
    out.n_terms = n + 1;
    out.l_terms = std::max(out.l_terms, l_used);
    l_guess = std::max(32, l_used + 8);

    if (std::fabs(n_term) <= tol * std::fabs(total.get())) {
      if (++consec >= 3) {
        out.tail_estimate = std::fabs(n_term);
        out.value = total.get();
        return out;
      }
    } else {
      consec = 0;
    }
  }
  throw NonConvergence("mutual_free_energy: n sum not converged within n_max");
}

// Surface force per unit area at r = b, from a Richardson-extrapolated
// central difference of the free energy in b.  Negative means attraction.
inline double casimir_force(const Geometry& g, const PermittivityModel& pm,
                            const ThermalState& th, double tol, const SumLimits& lim = {}) {
  double beta = th.beta(g.a);
  auto free_energy = [&](double b) {
    return mutual_free_energy(Geometry(g.a, b), pm, th, 0.01 * tol, lim).value / beta;
  };
  double h = 0.02 * g.gap();
  auto central = [&](double step) {
    return (free_energy(g.b + step) - free_energy(g.b - step)) / (2.0 * step);
  };
  double d1 = central(h);
  double d2 = central(0.5 * h);
  double dFdb = (4.0 * d2 - d1) / 3.0;
  return -dFdb / (4.0 * M_PI * g.b * g.b);
}

}  // namespace casimir
