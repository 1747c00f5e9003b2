#pragma once

#include <cmath>
#include <string>

#include "casimir/geometry.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/series.hpp"

// Closed-form and narrow-slit limiting results: proximity (Debye)
// limits of the concentric-sphere free energy, high-temperature
// formulas, and the parallel-plate expressions they reduce to.

namespace casimir {

inline constexpr double kZeta3 = 1.2020569031595942854;  // zeta(3)
inline constexpr double kZeta4 = 1.0823232337111381916;  // zeta(4) = pi^4/90

// T = 0 narrow-slit energy
//   E = (2/(pi a)) sum_l nu^2 Int_0^inf dz ln(1 - exp(-2 xi nu sqrt(1+z^2))),
// z = sinh u substitution for exponential tail decay.
inline double narrow_slit_energy_T0(const Geometry& g, double tol,
                                    const SumLimits& lim = {}) {
  if (!(tol > 0.0)) throw std::invalid_argument("narrow_slit_energy_T0: tol > 0");
  double xi = g.xi();
  KahanSum sum;
  for (int l = 1; l <= lim.l_max; ++l) {
    double nu = l + 0.5;
    double c = 2.0 * xi * nu;
    double umax = std::acosh(std::max(2.0, 745.0 / c));
    auto f = [c](double u) {
      double ch = std::cosh(u);
      return std::log1p(-std::exp(-c * ch)) * ch;
    };
    double term = nu * nu * integrate(f, 0.0, umax, 0.01 * tol).value;
    sum.add(term);
    if (l >= 3 && std::fabs(term) <= 0.1 * tol * std::fabs(sum.get()))
      return 2.0 / (M_PI * g.a) * sum.get();
  }
  throw NonConvergence("narrow_slit_energy_T0: l sum not converged");
}

// Finite-temperature narrow-slit free energy
//   beta F = 4 sum'_n sum_l nu ln(1 - exp(-2 xi sqrt(nu^2 + n^2 t^2))).
inline double narrow_slit_free_energy(const Geometry& g, const ThermalState& th, double tol,
                                      const SumLimits& lim = {}) {
  if (!(tol > 0.0)) throw std::invalid_argument("narrow_slit_free_energy: tol > 0");
  if (!(th.t > 0.0))
    throw std::invalid_argument("narrow_slit_free_energy: t > 0 (use the T = 0 form)");
  double xi = g.xi();
  auto l_sum = [&](double nt) {
    KahanSum part;
    for (int l = 1; l <= lim.l_max; ++l) {
      double nu = l + 0.5;
      double arg = 2.0 * xi * std::sqrt(nu * nu + nt * nt);
      double term = arg > 700.0 ? 0.0 : nu * std::log1p(-std::exp(-arg));
      part.add(term);
      if (l >= 3 && std::fabs(term) <= 0.1 * tol * std::fabs(part.get())) return part.get();
    }
    throw NonConvergence("narrow_slit_free_energy: l sum not converged");
  };
  KahanSum total;
  total.add(0.5 * l_sum(0.0));
  int consec = 0;
  for (long long n = 1; n <= lim.n_max; ++n) {
    double term = l_sum(double(n) * th.t);
    total.add(term);
    if (std::fabs(term) <= tol * std::fabs(total.get())) {
      if (++consec >= 3) return 4.0 * total.get();
    } else {
      consec = 0;
    }
  }
  throw NonConvergence("narrow_slit_free_energy: n sum not converged");
}

// High-temperature (n = 0 dominated) closed form beta F = -zeta(3)/(2 xi^2).
inline double high_T_slit_closed_form(const Geometry& g) {
  return -0.5 * kZeta3 / (g.xi() * g.xi());
}

// per-unit-area variant beta F / A = -zeta(3)/(8 pi d^2)
inline double high_T_slit_closed_form_per_area(double d) {
  if (!(d > 0.0)) throw std::invalid_argument("high_T_slit_closed_form_per_area: d > 0");
  return -kZeta3 / (8.0 * M_PI * d * d);
}

// Parallel conducting plates at gap d: beta F per unit area,
//   (1/pi) sum'_n Int_{zeta_n}^inf q dq ln(1 - exp(-2qd)),
// with each q-integral evaluated by its exact exponential series.
inline double plate_free_energy_conductor(double d, double beta, double tol,
                                          const SumLimits& lim = {}) {
  if (!(d > 0.0) || !(beta > 0.0))
    throw std::invalid_argument("plate_free_energy_conductor: d > 0, beta > 0");
  if (!(tol > 0.0)) throw std::invalid_argument("plate_free_energy_conductor: tol > 0");
  auto q_integral = [&](double zeta) {
    // Int_zeta^inf q ln(1-e^{-2qd}) dq = -sum_m e^{-2 m zeta d} (zeta/(2md) + 1/(4 m^2 d^2))/m
    KahanSum s;
    for (int m = 1; m <= 2000000; ++m) {
      double a = 2.0 * m * zeta * d;
      if (a > 700.0) break;
      double term = -std::exp(-a) * (zeta / (2.0 * m * d) + 1.0 / (4.0 * m * m * d * d)) / m;
      s.add(term);
      if (m >= 4 && std::fabs(term) <= 0.01 * tol * std::fabs(s.get())) break;
    }
    return s.get();
  };
  KahanSum total;
  total.add(0.5 * q_integral(0.0));
  int consec = 0;
  for (long long n = 1; n <= lim.n_max; ++n) {
    double term = q_integral(2.0 * M_PI * n / beta);
    total.add(term);
    if (std::fabs(term) <= tol * std::fabs(total.get())) {
      if (++consec >= 3) return total.get() / M_PI;
    } else {
      consec = 0;
    }
  }
  throw NonConvergence("plate_free_energy_conductor: n sum not converged");
}

// Lifshitz parallel-plate free energy per unit area for arbitrary
// permittivity on the imaginary axis:
//   (1/4pi) sum_K Int_{zeta_n}^inf q dq [ln(1-A_n e^{-2qd}) + ln(1-B_n e^{-2qd})].
inline double lifshitz_plate_free_energy(double d, const PermittivityModel& pm, double beta,
                                         double tol, const SumLimits& lim = {}) {
  if (!(d > 0.0) || !(beta > 0.0))
    throw std::invalid_argument("lifshitz_plate_free_energy: d > 0, beta > 0");
  if (!(tol > 0.0)) throw std::invalid_argument("lifshitz_plate_free_energy: tol > 0");
  auto q_integral = [&](double zeta) {
    double eps = pm.at_imaginary(zeta);
    auto h = [&](double q) {
      double w = std::exp(-2.0 * q * d);
      if (w == 0.0) return 0.0;
      double A, B;
      if (pm.is_conductor()) {
        A = B = 1.0;
      } else {
        // kappa = sqrt(1 + (eps-1) zeta^2 / q^2) on the imaginary axis
        double kap = std::sqrt(1.0 + (eps - 1.0) * zeta * zeta / (q * q));
        A = (eps - kap) / (eps + kap);
        A *= A;
        B = (1.0 - kap) / (1.0 + kap);
        B *= B;
      }
      return q * (std::log1p(-A * w) + std::log1p(-B * w));
    };
    return integrate_semi_infinite(h, zeta, 1.0 / d, 0.01 * tol).value;
  };
  KahanSum total;
  total.add(0.5 * q_integral(0.0));
  int consec = 0;
  for (long long n = 1; n <= lim.n_max; ++n) {
    double term = q_integral(2.0 * M_PI * n / beta);
    total.add(term);
    double ref = std::fabs(total.get());
    if (ref == 0.0 || std::fabs(term) <= tol * ref) {
      if (++consec >= 3) return 2.0 * total.get() / (4.0 * M_PI);
    } else {
      consec = 0;
    }
  }
  throw NonConvergence("lifshitz_plate_free_energy: n sum not converged");
}

}  // namespace casimir
