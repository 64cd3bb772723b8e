#pragma once

// Unweighted clamped ball in R^n: radial modes of order l are
// r^{-nu} (J_nu(k r) + c I_nu(k r)) with nu = n/2 - 1 + l, and the clamped
// conditions reduce to J_nu(k) I_{nu+1}(k) + I_nu(k) J_{nu+1}(k) = 0.
// Lambda R^4 = k^4 for the first positive root k.

#include <cmath>

namespace cpld::test {

inline double clamped_ball_determinant(double nu, double k) {
  return std::cyl_bessel_j(nu, k) * std::cyl_bessel_i(nu + 1, k) +
         std::cyl_bessel_i(nu, k) * std::cyl_bessel_j(nu + 1, k);
}

/// First root k by scan + bisection; returns k^4 (the eigenvalue of the unit ball).
inline double clamped_unit_ball_eigenvalue(int n, int l) {
  const double nu = 0.5 * n - 1.0 + l;
  double lo = 0.5, flo = clamped_ball_determinant(nu, lo);
  double hi = lo;
  for (;;) {
    hi = lo + 0.01;
    const double fhi = clamped_ball_determinant(nu, hi);
    if (std::signbit(fhi) != std::signbit(flo)) break;
    lo = hi;
    flo = fhi;
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = clamped_ball_determinant(nu, mid);
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  const double k = 0.5 * (lo + hi);
  return k * k * k * k;
}

}  // namespace cpld::test
