#pragma once

#include <cmath>
#include <utility>

namespace casimir {

// Number stored as m * exp(lg).  Products of Riccati-Bessel values at
// arguments of order 10^3 leave the double range; every bracket in the
// eigenvalue formulas is therefore formed in this representation.
struct Scaled {
  double m = 0.0;   // mantissa, kept in [1, e) after normalization
  double lg = 0.0;  // natural-log scale

  static Scaled from(double v) {
    if (v == 0.0) return {0.0, 0.0};
    return normalized({v, 0.0});
  }

  static Scaled from_log(double logv, double sign = 1.0) {
    double k = std::floor(logv);
    return {sign * std::exp(logv - k), k};
  }

  double value() const { return m * std::exp(lg); }
  double log_abs() const { return std::log(std::fabs(m)) + lg; }

  static Scaled normalized(Scaled a) {
    if (a.m == 0.0 || !std::isfinite(a.m)) return {a.m, 0.0};
    double k = std::floor(std::log(std::fabs(a.m)));
    if (k != 0.0) {
      a.m *= std::exp(-k);
      a.lg += k;
    }
    return a;
  }
};

inline Scaled operator*(Scaled a, Scaled b) {
  if (a.m == 0.0 || b.m == 0.0) return {0.0, 0.0};
  return Scaled::normalized({a.m * b.m, a.lg + b.lg});
}

inline Scaled operator*(double c, Scaled a) {
  if (c == 0.0 || a.m == 0.0) return {0.0, 0.0};
  return Scaled::normalized({c * a.m, a.lg});
}

inline Scaled operator/(Scaled a, Scaled b) {
  if (a.m == 0.0) return {0.0, 0.0};
  return Scaled::normalized({a.m / b.m, a.lg - b.lg});
}

inline Scaled operator+(Scaled a, Scaled b) {
  if (a.m == 0.0) return b;
  if (b.m == 0.0) return a;
  if (a.lg < b.lg) std::swap(a, b);
  return Scaled::normalized({a.m + b.m * std::exp(b.lg - a.lg), a.lg});
}

inline Scaled operator-(Scaled a, Scaled b) {
  b.m = -b.m;
  return a + b;
}

inline Scaled operator-(Scaled a) {
  a.m = -a.m;
  return a;
}

}  // namespace casimir
