#pragma once

// Finite-difference eigensolver for the radial clamped-plate problem
//   (d^2/dr^2 + ((n-1)/r + phi'(r)) d/dr - l(l+n-2)/r^2)^2 y = Lambda y,
//   y(R) = y'(R) = 0,
// with a general even convex exponent phi. Independent of the Kummer path and
// used to cross-check it.
//
// Grid: staggered nodes r_i = (i - 1/2) h, i = 1..N, with r_{N+1} = R, so
// h = R / (N + 1/2) and no node sits on the origin. Ghost values:
//   y_0 = (-1)^l y_1      (parity of r^l times an even function)
//   y_{N+2} = y_N         (y'(R) = 0, central)
// The drift operator A_r is discretised with central differences at nodes
// 1..N+1 and the quadratic form sum_i w_i (A_r y)_i^2, w_i = r_i^{n-1} e^{phi} h
// (h/2 at r = R), is minimised against sum_i w_i y_i^2.

#include <functional>

namespace cpld::fd {

struct RadialDensity {
  std::function<double(double)> phi;
  std::function<double(double)> dphi;

  /// phi(r) = r^2 / 2.
  static RadialDensity anti_gaussian();
  /// phi = 0: the unweighted clamped plate.
  static RadialDensity flat();
};

struct FdProblem {
  int n = 2;
  int l = 0;
  double R = 1.0;
  int mesh = 1000;  ///< interior nodes, >= 64
  RadialDensity density = RadialDensity::anti_gaussian();
};

inline constexpr int kMinMesh = 64;
inline constexpr double kInverseIterationTol = 1e-10;
inline constexpr int kMaxInverseIterations = 500;

/// Smallest generalised eigenvalue of L^T W_L L y = Lambda W y.
/// Throws NonConvergent when the Rayleigh quotient has not settled to
/// kInverseIterationTol (relative change) within kMaxInverseIterations.
double fd_lowest_eigenvalue(const FdProblem& problem);

}  // namespace cpld::fd
