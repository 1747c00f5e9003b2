#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "casimir/riccati.hpp"

using namespace casimir;

namespace {

// Closed forms for low orders, evaluated directly:
//   s_1 = cosh x - sinh x / x
//   s_2 = (1 + 3/x^2) sinh x - (3/x) cosh x
//   e_1 = e^-x (1 + 1/x),  e_2 = e^-x (1 + 3/x + 3/x^2)
double s1(double x) { return std::cosh(x) - std::sinh(x) / x; }
double s2(double x) { return (1.0 + 3.0 / (x * x)) * std::sinh(x) - 3.0 / x * std::cosh(x); }
double e1(double x) { return std::exp(-x) * (1.0 + 1.0 / x); }
double e2(double x) { return std::exp(-x) * (1.0 + 3.0 / x + 3.0 / (x * x)); }

// Ascending-series oracle for s_l, independent of any recurrence:
//   s_l(x) = sqrt(pi) sum_k (x/2)^{2k+l+1} / (k! Gamma(k + l + 3/2))
double s_series(int l, double x) {
  double sum = 0.0;
  for (int k = 0; k < 200; ++k) {
    double lg = 0.5 * std::log(M_PI) + (2 * k + l + 1) * std::log(0.5 * x) -
                std::lgamma(k + 1.0) - std::lgamma(k + l + 1.5);
    double t = std::exp(lg);
    sum += t;
    if (t < 1e-18 * sum) break;
  }
  return sum;
}

}  // namespace

TEST_CASE("low-order closed forms") {
  for (double x : {0.05, 0.4, 1.0, 3.0, 12.0}) {
    CHECK(riccati_s(1, x).value() == doctest::Approx(s1(x)).epsilon(1e-12));
    CHECK(riccati_s(2, x).value() == doctest::Approx(s2(x)).epsilon(1e-12));
    CHECK(riccati_e(1, x).value() == doctest::Approx(e1(x)).epsilon(1e-13));
    CHECK(riccati_e(2, x).value() == doctest::Approx(e2(x)).epsilon(1e-13));
  }
}

TEST_CASE("frozen extended-precision values") {
  CHECK(riccati_s(5, 2.5).value() ==
        doctest::Approx(0.029757771323486327604).epsilon(1e-13));
  CHECK(riccati_e(7, 0.8).value() ==
        doctest::Approx(628740.39187980643107).epsilon(1e-13));
}

TEST_CASE("ascending series agreement across the strategy switch") {
  for (int l : {3, 8, 20, 45}) {
    for (double x : {0.2, 1.0, 5.0, 30.0}) {
      double ref = s_series(l, x);
      CHECK(riccati_s(l, x).value() == doctest::Approx(ref).epsilon(1e-12));
    }
  }
}

TEST_CASE("wronskian defect stays at rounding level") {
  double worst = 0.0;
  for (int l = 0; l <= 80; l += (l < 12 ? 1 : 7))
    for (double x = 1e-3; x <= 50.0; x *= 1.9)
      worst = std::max(worst, std::fabs(wronskian_defect(l, x)));
  CHECK(worst <= 1e-12);
}

TEST_CASE("positivity, monotonicity, ratio bound") {
  for (int l : {1, 4, 15, 60}) {
    double prev_s = -std::numeric_limits<double>::infinity();
    for (double x : {0.1, 0.5, 2.0, 9.0, 40.0}) {
      ScaledRiccati s = riccati_s(l, x), e = riccati_e(l, x);
      CHECK(s.mantissa > 0.0);
      CHECK(s.d_mantissa > 0.0);
      CHECK(e.mantissa > 0.0);
      CHECK(e.d_mantissa < 0.0);
      double lv = s.log_value();
      CHECK(lv > prev_s);  // s_l strictly increasing in x
      prev_s = lv;
      // s_l(x) e_l(x) < 1 for all x (mode ratios stay below 1)
      CHECK(s.log_value() + e.log_value() < 0.0);
    }
  }
}

TEST_CASE("large-argument asymptotics") {
  // for x >> l: s_l -> e^x / 2, e_l -> e^-x, within 1% at x = 10(l + 1/2)
  for (int l : {2, 6, 14}) {
    double x = 10.0 * (l + 0.5);
    CHECK(riccati_s(l, x).log_value() == doctest::Approx(x - M_LN2).epsilon(1e-2));
    CHECK(riccati_e(l, x).log_value() == doctest::Approx(-x).epsilon(1e-2));
  }
}

TEST_CASE("small-argument leading forms") {
  for (int l : {1, 5, 25}) {
    double x = 1e-4 * (2 * l + 1);
    CHECK(riccati_s(l, x).value() == doctest::Approx(small_arg_s(l, x)).epsilon(1e-6));
    CHECK(riccati_e(l, x).value() == doctest::Approx(small_arg_e(l, x)).epsilon(1e-6));
    // crossover: the leading forms match the full values much better than
    // the next-order correction (x/nu)^2
    double rel_s = std::fabs(riccati_s(l, x).value() / small_arg_s(l, x) - 1.0);
    CHECK(rel_s < 1e-5);
  }
}

TEST_CASE("zero-frequency ratio limit") {
  // s_l(x)/e_l(x) -> (x/2)^{2l+1} pi / (Gamma(l+1/2) Gamma(l+3/2)) as x -> 0;
  // at two small arguments with fixed geometry the product tends to (a/b)^{2l+1}
  double a = 0.3, b = 1.0, zeta = 1e-5;
  for (int l : {1, 3, 9}) {
    ScaledRiccati sx = riccati_s(l, zeta * a), ex = riccati_e(l, zeta * a);
    ScaledRiccati sy = riccati_s(l, zeta * b), ey = riccati_e(l, zeta * b);
    double prod = std::exp(sx.log_value() - ex.log_value() + ey.log_value() - sy.log_value());
    CHECK(prod == doctest::Approx(std::pow(a / b, 2 * l + 1)).epsilon(1e-8));
  }
}

TEST_CASE("uniform large-order decay of the ratio products") {
  // exp(-nu phi) approximates the product up to O(1/nu) plus a
  // gap-dependent defect; the second-order phi removes the latter
  double xi = 0.1, x = 40.0;
  auto defect = [&](int l, bool second) {
    double nu = l + 0.5;
    double y = x * (1.0 + xi);
    ScaledRiccati sx = riccati_s(l, x), ex = riccati_e(l, x);
    ScaledRiccati sy = riccati_s(l, y), ey = riccati_e(l, y);
    double lnF = sx.log_value() - ex.log_value() + ey.log_value() - sy.log_value();
    double phi = debye_phi({xi, x / nu, nu}, second);
    return std::fabs(lnF + nu * phi) / (nu * phi);
  };
  // first-order defect saturates near xi/2 at large order
  double d1 = defect(160, false);
  CHECK(d1 < 0.1);
  // second-order phi shrinks it by well over a factor 2
  double d2 = defect(160, true);
  CHECK(d2 < 0.5 * d1);
  CHECK(d2 < 0.02);
}

TEST_CASE("second derivative identity via differentiating s'") {
  // s'' = (1 + l(l+1)/x^2) s; check against a central difference of s'
  for (int l : {2, 7}) {
    for (double x : {0.8, 4.0, 17.0}) {
      double h = 1e-5 * x;
      double num =
          (riccati_s(l, x + h).value() - riccati_s(l, x - h).value()) / (2.0 * h);
      CHECK(num == doctest::Approx(riccati_s(l, x).derivative()).epsilon(1e-8));
      double curv = 1.0 + double(l) * (l + 1) / (x * x);
      double num2 =
          (riccati_s(l, x + h).derivative() - riccati_s(l, x - h).derivative()) / (2.0 * h);
      CHECK(num2 == doctest::Approx(curv * riccati_s(l, x).value()).epsilon(1e-7));
    }
  }
}

TEST_CASE("batch tables match the scalar routines") {
  for (double x : {0.03, 0.9, 8.0, 300.0}) {
    int lmax = 60;
    auto st = riccati_s_table(lmax, x);
    auto et = riccati_e_table(lmax, x);
    for (int l = 0; l <= lmax; l += 9) {
      ScaledRiccati s = riccati_s(l, x), e = riccati_e(l, x);
      CHECK(st[l].log_value() == doctest::Approx(s.log_value()).epsilon(1e-12));
      CHECK(et[l].log_value() == doctest::Approx(e.log_value()).epsilon(1e-12));
      CHECK(st[l].d_mantissa / st[l].mantissa ==
            doctest::Approx(s.d_mantissa / s.mantissa).epsilon(1e-11));
      CHECK(et[l].d_mantissa / et[l].mantissa ==
            doctest::Approx(e.d_mantissa / e.mantissa).epsilon(1e-11));
    }
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(riccati_s(-1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(riccati_s(3, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(riccati_e(3, -2.0), std::invalid_argument);
  CHECK_THROWS_AS(debye_phi({0.0, 1.0, 5.5}), std::invalid_argument);
}
