#pragma once

#include <cmath>

#include "casimir/geometry.hpp"
#include "casimir/series.hpp"

// Zero-Matsubara-frequency (classical) free energy for arbitrary
// permittivity, and the dilute-limit overlap series used as an oracle.

namespace casimir {

// Coupling strength A_l = (eps-1)^2 (l+1) l / { [eps(l+1)+l] (eps l + l + 1) }.
// eps = infinity short-circuits to the conductor value 1.
inline double static_coupling(double epsilon, int l) {
  if (l < 1) throw std::invalid_argument("static_coupling: sums start at l = 1");
  if (!(epsilon > 0.0)) throw std::invalid_argument("static_coupling: eps > 0 required");
  if (std::isinf(epsilon)) return 1.0;
  double em1 = epsilon - 1.0;
  return em1 * em1 * double(l + 1) * double(l) /
         ((epsilon * (l + 1) + l) * (epsilon * l + l + 1));
}

namespace detail {

// Rigorous bound on sum_{l>L} (2l+1) u_l / (1-u_l) with u_l <= sigma_l,
// using sigma_{L+m} = sigma_L rho^m, rho = (a/b)^2, and |ln(1-u)| <= u/(1-u).
inline double static_tail_bound(const Geometry& g, int L) {
  double rho = g.radius_ratio() * g.radius_ratio();
  double sigL = g.sigma(L);
  double geom = sigL * ((2.0 * L + 1.0) * rho / (1.0 - rho) +
                        2.0 * rho / ((1.0 - rho) * (1.0 - rho)));
  return geom / (1.0 - g.sigma(L + 1));
}

template <class Term>
inline SeriesResult static_l_sum(const Geometry& g, double tol, const SumLimits& lim,
                                 Term term, const char* who) {
  KahanSum sum;
  SeriesResult out;
  out.tolerance = tol;
  for (int l = 1; l <= lim.l_max; ++l) {
    sum.add(term(l));
    ++out.term_evals;
    out.l_terms = l;
    double tail = static_tail_bound(g, l);
    if (tail <= tol * std::fabs(sum.get()) && l >= 2) {
      out.tail_estimate = tail;
      out.value = sum.get();
      return out;
    }
  }
  throw NonConvergence(std::string(who) + ": l sum not converged within l_max");
}

}  // namespace detail

// beta F = (1/2) sum_{l>=1} (2l+1) ln(1 - A_l sigma_l); always < 0 for eps > 1.
inline SeriesResult static_free_energy(const Geometry& g, double epsilon, double tol,
                                       const SumLimits& lim = {}) {
  if (!(tol > 0.0)) throw std::invalid_argument("static_free_energy: tol > 0");
  auto r = detail::static_l_sum(
      g, tol, lim,
      [&](int l) {
        return 0.5 * (2.0 * l + 1.0) * std::log1p(-static_coupling(epsilon, l) * g.sigma(l));
      },
      "static_free_energy");
  return r;
}

// -sum (2l+1) A_l sigma_l / (1 - A_l sigma_l): the coupling-strength
// derivative of the free energy at unit strength.
inline SeriesResult static_energy_derivative(const Geometry& g, double epsilon, double tol,
                                             const SumLimits& lim = {}) {
  if (!(tol > 0.0)) throw std::invalid_argument("static_energy_derivative: tol > 0");
  return detail::static_l_sum(
      g, tol, lim,
      [&](int l) {
        double u = static_coupling(epsilon, l) * g.sigma(l);
        return -(2.0 * l + 1.0) * u / (1.0 - u);
      },
      "static_energy_derivative");
}

// Dimensionless dilute-limit overlap series
//   (8 pi^2 / 3) sum_{l=1}^{l_max} l(l+1)/(2l+1) sigma_l,
// equal to the double volume integral of 1/r^6 over the two bodies
// (geometry carried entirely by sigma_l).
inline double dilute_overlap_series(const Geometry& g, int l_max) {
  KahanSum sum;
  for (int l = 1; l <= l_max; ++l)
    sum.add(double(l) * double(l + 1) / (2.0 * l + 1.0) * g.sigma(l));
  return 8.0 * M_PI * M_PI / 3.0 * sum.get();
}

}  // namespace casimir
