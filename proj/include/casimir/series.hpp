#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

// Convergence metadata attached to every summed quantity.
struct SeriesResult {
  double value = 0.0;
  int l_terms = 0;            // largest angular-momentum index used
  long long n_terms = 1;      // number of Matsubara indices summed (1 for static)
  long long term_evals = 0;   // total (l, n) terms evaluated in the double sum
  double tail_estimate = 0.0;
  double tolerance = 0.0;
};

class NonConvergence : public std::runtime_error {
 public:
  explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

// Caps guarding the double sums.  Narrow slits need l of order a/d.
struct SumLimits {
  int l_max = 5000;
  long long n_max = 2000000;
};

// Compensated accumulator; keeps the reductions reproducible to the bit
// for a fixed summation order.
struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  double get() const { return s; }
};

}  // namespace casimir
