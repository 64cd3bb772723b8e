#pragma once

// Scan-and-refine search for the smallest positive root of an odd function of
// the frequency lambda (the ball secular function or the J_{A,B} condition).

#include <algorithm>
#include <optional>
#include <sstream>

#include "cpld/error.hpp"
#include "cpld/roots.hpp"

namespace cpld {

/// Grid used to look for the first sign change. All lengths scale with
/// s = max(1, 1/R^2) since eigenfrequencies grow like R^{-2} for small balls.
struct LambdaScan {
  double step = 0.25;
  double ceiling = 50.0;
  double max_ceiling = 6400.0;
};

inline constexpr double kRootRelTol = 1e-11;
inline constexpr double kMinAcceptedLambda = 1e-6;

inline LambdaScan lambda_scan_for_radius(double R) {
  const double s = std::max(1.0, 1.0 / (R * R));
  return {0.25 * s, 50.0 * s, 6400.0 * s};
}

/// Smallest lambda > 0 at which f changes sign, refined by Brent. The ceiling
/// doubles until a sign change is seen or max_ceiling is passed.
template <class F>
double smallest_positive_root(F&& f, const LambdaScan& scan, const char* what) {
  double lo = scan.step;
  double hi = scan.ceiling;
  for (;;) {
    if (auto br = roots::scan_sign_change(f, lo, hi, scan.step)) {
      const double root = roots::brent(f, *br, kRootRelTol);
      if (root > kMinAcceptedLambda) return root;
      lo = br->hi;
      continue;
    }
    if (hi >= scan.max_ceiling) break;
    lo = hi;
    hi = std::min(2.0 * hi, scan.max_ceiling);
  }
  std::ostringstream msg;
  msg << what << ": no sign change below lambda=" << scan.max_ceiling;
  throw NoRootFound(msg.str());
}

/// Looks for a sign change in [0.75, 1.25] * hint first; returns nullopt when
/// that window holds none.
template <class F>
std::optional<double> root_near(F&& f, const LambdaScan& scan, double hint) {
  const double lo = std::max(scan.step, 0.75 * hint);
  const double hi = 1.25 * hint;
  const double step = std::min(scan.step, 0.5 * (hi - lo));
  if (!(hi > lo) || !(step > 0.0)) return std::nullopt;
  if (auto br = roots::scan_sign_change(f, lo, hi, step)) {
    const double root = roots::brent(f, *br, kRootRelTol);
    if (root > kMinAcceptedLambda) return root;
  }
  return std::nullopt;
}

}  // namespace cpld
