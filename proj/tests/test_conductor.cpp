#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "casimir/asymptotics.hpp"
#include "casimir/conductor_solver.hpp"
#include "casimir/static_solver.hpp"

using namespace casimir;

TEST_CASE("zero-frequency term: frozen value and factor-2 identity") {
  Geometry g(0.1, 1.0);
  CHECK(n0_term(g) == doctest::Approx(-3.0522103621024436e-3).epsilon(1e-12));
  for (double ab : {0.1, 0.5, 0.9}) {
    Geometry gg(ab, 1.0);
    double stat =
        static_free_energy(gg, std::numeric_limits<double>::infinity(), 1e-13).value;
    CHECK(n0_term(gg) == doctest::Approx(2.0 * stat).epsilon(1e-13));
  }
}

TEST_CASE("mode ratios bounded and ordered") {
  for (int l : {1, 3, 10}) {
    for (double x : {0.3, 2.0, 15.0}) {
      for (double f : {1.2, 2.0, 5.0}) {
        ConductorModeRatios r = conductor_ratios(l, x, f * x);
        CHECK(r.rF > 0.0);
        CHECK(r.rF < 1.0);
        CHECK(r.rG > 0.0);
        CHECK(r.rG < 1.0);
      }
    }
  }
  CHECK_THROWS_AS(conductor_ratios(2, 1.0, 0.5), std::invalid_argument);
}

TEST_CASE("machine value at t = 200, d/a = 0.05") {
  Geometry g = Geometry::from_gap_ratio(0.05);
  SeriesResult r = conductor_free_energy(g, ThermalState(200.0), 1e-8);
  CHECK(r.value == doctest::Approx(-249.739094914).epsilon(1e-6));
  // the zero-frequency term dominates at this temperature
  CHECK(r.value == doctest::Approx(n0_term(g)).epsilon(1e-6));
}

TEST_CASE("zero-temperature energy vs plate reduction") {
  Geometry g = Geometry::from_gap_ratio(0.01);
  double per_area = conductor_energy_T0(g, 1e-7).value / g.area();
  double plate = -M_PI * M_PI / (720.0 * std::pow(g.gap(), 3));
  CHECK(per_area == doctest::Approx(plate).epsilon(0.02));
}

TEST_CASE("low-temperature plateau") {
  Geometry g = Geometry::from_gap_ratio(0.1);
  double bft1 = conductor_free_energy(g, ThermalState(1.0), 1e-7).value;  // times t = 1
  double bft0 = 2.0 * M_PI * g.a * conductor_energy_T0(g, 1e-7).value;
  CHECK(std::log10(-bft1) == doctest::Approx(std::log10(-bft0)).epsilon(1e-3));
}

TEST_CASE("surface force from the analytic derivative matches the energy slope") {
  Geometry g(1.0, 1.3);
  ThermalState th(2.0);
  double f = conductor_force(g, th, 1e-8).f_int;
  CHECK(f < 0.0);
  double beta = th.beta(g.a);
  double h = 0.01 * g.gap();
  double fp = conductor_free_energy(Geometry(g.a, g.b + h), th, 1e-10).value / beta;
  double fm = conductor_free_energy(Geometry(g.a, g.b - h), th, 1e-10).value / beta;
  double secant = -(fp - fm) / (2.0 * h) / (4.0 * M_PI * g.b * g.b);
  CHECK(f == doctest::Approx(secant).epsilon(1e-2));
}

TEST_CASE("free energy sign and separation decay") {
  ThermalState th(1.0);
  double prev = -std::numeric_limits<double>::infinity();
  for (double da : {0.3, 1.0, 5.0, 30.0}) {
    double v = conductor_free_energy(Geometry::from_gap_ratio(da), th, 1e-7).value;
    CHECK(v < 0.0);
    CHECK(v > prev);
    prev = v;
  }
  // at d/a = 30 the residual is the zero-frequency term ~ -3 (a/b)^3
  CHECK(std::fabs(prev) < 2e-4);
}

TEST_CASE("error paths") {
  Geometry g(1.0, 1.5);
  CHECK_THROWS_AS(conductor_free_energy(g, ThermalState(0.0), 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(conductor_free_energy(g, ThermalState(1.0), -1.0), std::invalid_argument);
  SumLimits tight;
  tight.l_max = 3;
  CHECK_THROWS_AS(conductor_free_energy(Geometry::from_gap_ratio(0.02), ThermalState(1.0),
                                        1e-8, tight),
                  NonConvergence);
}
