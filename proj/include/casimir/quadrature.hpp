#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

// Adaptive Gauss-Kronrod (G7/K15) with recursive bisection, plus a
// rational map for semi-infinite ranges.

namespace casimir {

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  long long evals = 0;
};

namespace detail {

// abscissae/weights on [-1, 1]; odd entries form the embedded G7 rule
inline constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <class F>
inline void gk15(const F& f, double a, double b, double& result, double& err) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fc = f(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    double x = h * kXgk[j];
    double f1 = f(c - x), f2 = f(c + x);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  result = resk * h;
  err = std::fabs((resk - resg) * h);
}

template <class F>
inline void adapt(const F& f, double a, double b, double tol_abs, int depth,
                  QuadResult& acc) {
  double r, e;
  gk15(f, a, b, r, e);
  acc.evals += 15;
  if (e <= tol_abs || depth >= 48) {
    acc.value += r;
    acc.abs_error += e;
    return;
  }
  double c = 0.5 * (a + b);
  adapt(f, a, c, 0.5 * tol_abs, depth + 1, acc);
  adapt(f, c, b, 0.5 * tol_abs, depth + 1, acc);
}

}  // namespace detail

template <class F>
inline QuadResult integrate(const F& f, double a, double b, double rel_tol,
                            double abs_floor = 1e-300) {
  if (!(b > a)) throw std::invalid_argument("integrate: requires b > a");
  // pilot pass fixes the absolute tolerance for the recursion
  double r, e;
  detail::gk15(f, a, b, r, e);
  double tol_abs = std::max(rel_tol * std::fabs(r), abs_floor);
  QuadResult acc;
  detail::adapt(f, a, b, tol_abs, 0, acc);
  return acc;
}

// Integral over [a, infinity) via x = a + scale * u / (1 - u), u in (0, 1).
// scale should match the decay length of the integrand.
template <class F>
inline QuadResult integrate_semi_infinite(const F& f, double a, double scale,
                                          double rel_tol) {
  if (!(scale > 0.0)) throw std::invalid_argument("integrate_semi_infinite: scale > 0");
  auto g = [&](double u) {
    double w = 1.0 - u;
    double x = a + scale * u / w;
    return f(x) * scale / (w * w);
  };
  return integrate(g, 0.0, 1.0, rel_tol);
}

}  // namespace casimir
