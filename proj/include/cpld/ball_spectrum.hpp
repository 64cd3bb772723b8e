#pragma once

// Clamped-plate spectrum of the centred ball B_R in anti-Gauss space.
//
// Radial modes are y(r) = r^l (M+(-r^2/2) + G_R M-(-r^2/2)) with
// M± = M((l ± lambda)/2, n/2 + l, .) and eigenvalue Lambda = lambda^2.
// G_R enforces y(R) = 0; y'(R) = 0 is the secular equation h_R(lambda) = 0.

#include <span>
#include <vector>

#include "cpld/error.hpp"

namespace cpld::ball {

struct SpectralMode {
  int l = 0;
  double lambda = 0.0;
  double Lambda = 0.0;  ///< lambda * lambda
  double G_R = 0.0;
};

struct RadialProfile {
  std::vector<double> radii;
  std::vector<double> values;
};

struct CurvePoint {
  double R = 0.0;
  double lambda = 0.0;  ///< NaN unless status == ok
  Status status = Status::ok;
};

/// Smallest admissible radius; below it Lambda ~ R^{-4} exhausts double range.
inline constexpr double kMinRadius = 1e-3;

/// h_R(lambda) = M+'(z) M-(z) - M-'(z) M+(z) at z = -R^2/2. Odd in lambda.
double secular_h(int n, int l, double R, double lambda);

/// G_R = -M+(-R^2/2) / M-(-R^2/2).
double closure_constant(int n, int l, double R, double lambda);

/// Fundamental tone for angular order l. Throws NoRootFound when the scan
/// finds no sign change.
SpectralMode lowest_eigenvalue(int n, int l, double R);

/// lowest_eigenvalue along an increasing R grid; failures are recorded per point.
std::vector<CurvePoint> eigenvalue_curve(int n, int l, std::span<const double> R_grid,
                                         bool parallel = false);

/// Samples y(r) on a uniform grid over [0, R] (both ends included).
RadialProfile eigenfunction_profile(const SpectralMode& mode, int n, double R, int samples);

}  // namespace cpld::ball
