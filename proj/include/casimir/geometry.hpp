#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

// Physical configuration types.  Natural units hbar = c = k_B = 1
// throughout; the CLI works with a = 1 so every quantity is the
// nondimensional one.

namespace casimir {

// Inner compact sphere of radius a, outer semi-infinite medium beyond b.
struct Geometry {
  double a;
  double b;

  Geometry(double a_, double b_) : a(a_), b(b_) {
    if (!(a > 0.0) || !(b > a))
      throw std::invalid_argument("Geometry: requires 0 < a < b");
  }

  static Geometry from_gap_ratio(double d_over_a, double a = 1.0) {
    return Geometry(a, a * (1.0 + d_over_a));
  }

  double gap() const { return b - a; }
  double xi() const { return (b - a) / a; }
  double area() const { return 4.0 * M_PI * a * a; }
  double radius_ratio() const { return a / b; }
  double sigma(int l) const { return std::pow(a / b, 2 * l + 1); }
};

// Thermal configuration, parameterized by the nondimensional
// temperature t = 2 pi a / beta.
struct ThermalState {
  double t;

  explicit ThermalState(double t_) : t(t_) {
    if (!(t >= 0.0)) throw std::invalid_argument("ThermalState: t >= 0 required");
  }

  static ThermalState from_beta(double beta, double a) {
    return ThermalState(2.0 * M_PI * a / beta);
  }

  double beta(double a) const { return 2.0 * M_PI * a / t; }
  // Matsubara frequency zeta_n = 2 pi n / beta = n t / a
  double zeta(long long n, double a) const { return double(n) * t / a; }
};

// Permittivity on the imaginary frequency axis.
struct PermittivityModel {
  enum class Kind { Constant, SingleOscillator, Conductor };

  Kind kind = Kind::Constant;
  double epsilon0 = 1.0;
  double omega0 = 1.0;

  static PermittivityModel constant(double eps) {
    if (!(eps >= 1.0)) throw std::invalid_argument("PermittivityModel: eps >= 1");
    return {Kind::Constant, eps, 1.0};
  }
  static PermittivityModel oscillator(double eps0, double w0) {
    if (!(eps0 >= 1.0) || !(w0 > 0.0))
      throw std::invalid_argument("PermittivityModel: eps0 >= 1, omega0 > 0");
    return {Kind::SingleOscillator, eps0, w0};
  }
  static PermittivityModel conductor() {
    return {Kind::Conductor, std::numeric_limits<double>::infinity(), 1.0};
  }

  bool is_conductor() const { return kind == Kind::Conductor; }

  // eps(i zeta): real, >= 1, non-increasing in zeta
  double at_imaginary(double zeta) const {
    switch (kind) {
      case Kind::Constant:
        return epsilon0;
      case Kind::SingleOscillator:
        return 1.0 + (epsilon0 - 1.0) / (1.0 + zeta * zeta / (omega0 * omega0));
      case Kind::Conductor:
        return std::numeric_limits<double>::infinity();
    }
    return 1.0;
  }
};

}  // namespace casimir
