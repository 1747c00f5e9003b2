#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "casimir/scaled.hpp"

// Overflow-safe Riccati-Bessel functions of imaginary rotated argument,
//   s_l(x) = sqrt(pi x / 2) I_{l+1/2}(x),   e_l(x) = sqrt(2 x / pi) K_{l+1/2}(x),
// their argument-derivatives, small-argument leading forms, and the
// first terms of the uniform (Debye) large-order expansion of the
// ratio products entering the mode eigenvalues.
//
// Evaluation strategy: e_l from its exact finite closed form
// (polynomial in 1/(2x) times exp(-x)); s_l from the three-term
// recurrence, run upward from the l = 0, -1 closed-form seeds when
// x clearly exceeds the order, otherwise downward with the top ratio
// s_{l+1}/s_l supplied by a Lentz continued fraction.  Derivatives come
// from the recurrence identities, never from finite differences.

namespace casimir {

struct ScaledRiccati {
  double mantissa = 0.0;    // value = mantissa * exp(log_scale)
  double d_mantissa = 0.0;  // argument-derivative, same log_scale
  double log_scale = 0.0;

  double value() const { return mantissa * std::exp(log_scale); }
  double derivative() const { return d_mantissa * std::exp(log_scale); }
  double log_value() const { return std::log(mantissa) + log_scale; }

  Scaled val() const { return {mantissa, log_scale}; }
  Scaled der() const { return {d_mantissa, log_scale}; }
};

namespace detail {

inline void check_arg(int l, double x, const char* who) {
  if (l < 0) throw std::invalid_argument(std::string(who) + ": order l must be >= 0");
  if (!std::isfinite(x) || x <= 0.0)
    throw std::invalid_argument(std::string(who) + ": argument must be finite and > 0");
}

// Keeps mantissa in [1, e); d_mantissa rides along.
inline ScaledRiccati band_normalize(double m, double dm, double lg) {
  double k = std::floor(std::log(std::fabs(m)));
  if (std::isfinite(k) && k != 0.0) {
    double f = std::exp(-k);
    m *= f;
    dm *= f;
    lg += k;
  }
  return {m, dm, lg};
}

inline double log_s0(double x) {
  // log sinh(x), safe for all x > 0
  return x + std::log1p(-std::exp(-2.0 * x)) - M_LN2;
}

// Continued fraction for the ratio s_{j0}(x) / s_{j0-1}(x)
//   = 1 / (a_{j0} + 1 / (a_{j0+1} + ...)),  a_j = (2j+1)/x.
// Modified Lentz.
inline double s_ratio_cf(int j0, double x) {
  const double tiny = 1e-300;
  const double eps = 1e-16;
  double f = tiny, c = f, d = 0.0;
  for (int k = 0; k < 100000; ++k) {
    double b = (2.0 * (j0 + k) + 1.0) / x;
    d = b + d;
    if (d == 0.0) d = tiny;
    c = b + 1.0 / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < eps) return f;
  }
  throw std::runtime_error("s_ratio_cf: continued fraction did not converge");
}

constexpr double kRescaleHi = 1e250;
constexpr double kRescaleLo = 1e-250;
constexpr double kRescaleLog = 575.6462732485114210;  // ln(1e250)

}  // namespace detail

// s_l(x) and its argument-derivative, relative accuracy ~1e-13.
inline ScaledRiccati riccati_s(int l, double x) {
  detail::check_arg(l, x, "riccati_s");
  if (l == 0) {
    double lg = detail::log_s0(x);
    // s_0' / s_0 = coth x
    return detail::band_normalize(1.0, 1.0 / std::tanh(x), lg);
  }
  if (x > 1.5 * l + 60.0) {
    // upward from cosh, sinh seeds (dominant regime, x >> l)
    double lg = x;
    double sm1 = 0.5 * (1.0 + std::exp(-2.0 * x));   // cosh(x) e^{-x}
    double s = 0.5 * (-std::expm1(-2.0 * x));        // sinh(x) e^{-x}
    for (int j = 0; j < l; ++j) {
      double next = sm1 - ((2.0 * j + 1.0) / x) * s;
      sm1 = s;
      s = next;
      if (s < detail::kRescaleLo) {
        s /= detail::kRescaleLo;
        sm1 /= detail::kRescaleLo;
        lg -= detail::kRescaleLog;
      }
    }
    double ds = sm1 - (double(l) / x) * s;
    return detail::band_normalize(s, ds, lg);
  }
  // downward ratio chain seeded by the continued fraction
  double r = detail::s_ratio_cf(l + 1, x);  // s_{l+1}/s_l
  double logsum = 0.0, rl = 0.0;
  for (int j = l; j >= 1; --j) {
    r = 1.0 / ((2.0 * j + 1.0) / x + r);  // now s_j / s_{j-1}
    if (j == l) rl = r;
    logsum += std::log(r);
  }
  double logv = detail::log_s0(x) + logsum;
  double dratio = 1.0 / rl - double(l) / x;  // s_l'/s_l = s_{l-1}/s_l - l/x
  double k = std::floor(logv);
  double m = std::exp(logv - k);
  return {m, m * dratio, k};
}

// e_l(x) and its argument-derivative from the exact half-integer-order
// closed form e_l(x) = exp(-x) sum_{k<=l} (l+k)! / (k! (l-k)!) (2x)^{-k}.
inline ScaledRiccati riccati_e(int l, double x) {
  detail::check_arg(l, x, "riccati_e");
  auto poly = [x](int order, double& lg_out) {
    // positive-term sum, rescaled on the fly
    double u = 1.0 / (2.0 * x);
    double t = 1.0, sum = 1.0, lg = 0.0;
    for (int k = 0; k < order; ++k) {
      t *= double(order + k + 1) * double(order - k) * u / double(k + 1);
      sum += t;
      if (sum > detail::kRescaleHi) {
        sum *= detail::kRescaleLo;
        t *= detail::kRescaleLo;
        lg += detail::kRescaleLog;
      }
    }
    lg_out = lg;
    return sum;
  };
  if (l == 0) return detail::band_normalize(1.0, -1.0, -x);
  double lg_l = 0.0, lg_lm1 = 0.0;
  double pl = poly(l, lg_l);
  double plm1 = poly(l - 1, lg_lm1);
  // e_l' = -e_{l-1} - (l/x) e_l, shared scale exp(-x + lg_l)
  double dm = -plm1 * std::exp(lg_lm1 - lg_l) - (double(l) / x) * pl;
  return detail::band_normalize(pl, dm, -x + lg_l);
}

// s_l(x) e_l'(x) - s_l'(x) e_l(x) + 1; identically 0 in exact arithmetic.
inline double wronskian_defect(int l, double x) {
  ScaledRiccati s = riccati_s(l, x);
  ScaledRiccati e = riccati_e(l, x);
  double cross = s.mantissa * e.d_mantissa - s.d_mantissa * e.mantissa;
  return cross * std::exp(s.log_scale + e.log_scale) + 1.0;
}

// Leading small-argument forms:
//   s_l -> sqrt(pi)/Gamma(nu+1) (x/2)^{nu+1/2},  e_l -> Gamma(nu)/sqrt(pi) (x/2)^{-nu+1/2}
inline double small_arg_s(int l, double x) {
  if (l < 0 || x < 0.0) throw std::invalid_argument("small_arg_s: bad input");
  if (x == 0.0) return 0.0;
  double nu = l + 0.5;
  return std::exp(0.5 * std::log(M_PI) - std::lgamma(nu + 1.0) + (l + 1) * std::log(0.5 * x));
}

inline double small_arg_e(int l, double x) {
  if (l < 0 || x < 0.0) throw std::invalid_argument("small_arg_e: bad input");
  double nu = l + 0.5;
  if (x == 0.0) return l == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  return std::exp(std::lgamma(nu) - 0.5 * std::log(M_PI) - double(l) * std::log(0.5 * x));
}

struct DebyeParams {
  double xi;  // relative gap (b-a)/a
  double z;   // scaled argument x/nu
  double nu;  // order l + 1/2
};

// phi such that exp(-nu phi) approximates both TM and TE conductor
// ratio products to O(1/nu).  First order by default; the second-order
// relative-gap correction is optional.
inline double debye_phi(const DebyeParams& p, bool second_order = false) {
  if (p.xi <= 0.0 || p.z < 0.0 || p.nu < 1.5)
    throw std::invalid_argument("debye_phi: invalid parameters");
  double w = 1.0 + p.z * p.z;
  double phi = 2.0 * p.xi * std::sqrt(w);
  if (second_order) phi *= 1.0 - 0.5 * p.xi / w;
  return phi;
}

// -------- batch evaluation at fixed argument --------
//
// The double sums evaluate s_l, e_l for every l up to a cutoff at the
// same argument; one recurrence pass per argument replaces per-l calls.

// e_l(x), l = 0..lmax; upward recurrence from the exact l = 0 seed.
inline std::vector<ScaledRiccati> riccati_e_table(int lmax, double x) {
  detail::check_arg(0, x, "riccati_e_table");
  std::vector<ScaledRiccati> out(lmax + 1);
  double lg = -x;
  double em1 = 1.0;  // e_{-1} = e_0 = exp(-x), scaled
  double e = 1.0;
  for (int j = 0; j <= lmax; ++j) {
    double de = -em1 - (double(j) / x) * e;
    out[j] = {e, de, lg};
    double next = em1 + ((2.0 * j + 1.0) / x) * e;
    em1 = e;
    e = next;
    if (e > detail::kRescaleHi) {
      e *= detail::kRescaleLo;
      em1 *= detail::kRescaleLo;
      lg += detail::kRescaleLog;
    }
  }
  return out;
}

// s_l(x), l = 0..lmax.
inline std::vector<ScaledRiccati> riccati_s_table(int lmax, double x) {
  detail::check_arg(0, x, "riccati_s_table");
  std::vector<ScaledRiccati> out(lmax + 1);
  if (x > 1.5 * lmax + 60.0) {
    double lg = x;
    double sm1 = 0.5 * (1.0 + std::exp(-2.0 * x));
    double s = 0.5 * (-std::expm1(-2.0 * x));
    for (int j = 0; j <= lmax; ++j) {
      double ds = sm1 - (double(j) / x) * s;
      out[j] = {s, ds, lg};
      double next = sm1 - ((2.0 * j + 1.0) / x) * s;
      sm1 = s;
      s = next;
      if (s < detail::kRescaleLo) {
        s /= detail::kRescaleLo;
        sm1 /= detail::kRescaleLo;
        lg -= detail::kRescaleLog;
      }
    }
    return out;
  }
  // downward pass, then pin the absolute scale with s_0 = sinh(x)
  double lg = 0.0;
  double sp1 = detail::s_ratio_cf(lmax + 1, x);  // s_{lmax+1} relative
  double s = 1.0;                                // s_{lmax} relative
  for (int j = lmax; j >= 0; --j) {
    double ds = sp1 + ((double(j) + 1.0) / x) * s;
    out[j] = {s, ds, lg};
    if (j > 0) {
      double next = sp1 + ((2.0 * j + 1.0) / x) * s;  // s_{j-1}
      sp1 = s;
      s = next;
      if (s > detail::kRescaleHi) {
        s *= detail::kRescaleLo;
        sp1 *= detail::kRescaleLo;
        lg += detail::kRescaleLog;  // entries already stored keep their recorded scale
      }
    }
  }
  double shift = detail::log_s0(x) - (std::log(out[0].mantissa) + out[0].log_scale);
  for (auto& r : out) {
    r.log_scale += shift;
    r = detail::band_normalize(r.mantissa, r.d_mantissa, r.log_scale);
  }
  return out;
}

}  // namespace casimir
