#pragma once

// One-dimensional bracketing, root refinement and minimisation.

#include <cmath>
#include <limits>
#include <optional>
#include <utility>

#include "cpld/error.hpp"

namespace cpld::roots {

struct Bracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;
};

/// Walks x = first, first+step, ... while x <= last and returns the first
/// interval on which f changes sign. An exact zero at a grid point is returned
/// as a degenerate bracket.
template <class F>
std::optional<Bracket> scan_sign_change(F&& f, double first, double last, double step) {
  double x_prev = first;
  double f_prev = f(x_prev);
  if (f_prev == 0.0) return Bracket{x_prev, x_prev, 0.0, 0.0};
  for (long i = 1;; ++i) {
    const double x = first + double(i) * step;
    if (x > last * (1.0 + 1e-14)) break;
    const double fx = f(x);
    if (fx == 0.0) return Bracket{x, x, 0.0, 0.0};
    if (std::signbit(fx) != std::signbit(f_prev)) return Bracket{x_prev, x, f_prev, fx};
    x_prev = x;
    f_prev = fx;
  }
  return std::nullopt;
}

/// Brent's method on a sign-change bracket. Stops when the bracket width is
/// below rel_tol * |x| (or an exact zero is hit).
template <class F>
double brent(F&& f, Bracket br, double rel_tol, int max_iter = 200) {
  double a = br.lo, b = br.hi, fa = br.f_lo, fb = br.f_hi;
  if (a == b || fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (std::signbit(fa) == std::signbit(fb)) throw NoRootFound("brent: interval does not bracket a root");

  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int it = 0; it < max_iter; ++it) {
    if (std::signbit(fb) == std::signbit(fc)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) +
                       0.5 * rel_tol * std::abs(b);
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || fb == 0.0) return b;

    if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q; else p = -p;
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    } else {
      d = m;
      e = m;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
    fb = f(b);
  }
  throw NonConvergent("brent: iteration cap reached");
}

struct Minimum {
  double x;
  double fx;
};

/// Golden-section search for a minimum of f on [lo, hi] down to width x_tol.
template <class F>
Minimum golden_section(F&& f, double lo, double hi, double x_tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > x_tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? Minimum{x1, f1} : Minimum{x2, f2};
}

}  // namespace cpld::roots
