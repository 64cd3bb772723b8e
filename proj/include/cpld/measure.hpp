#pragma once

// Weighted volume of centred balls under the anti-Gaussian density e^{|x|^2/2}:
//   Phi(R) = beta_n * int_0^R e^{r^2/2} r^{n-1} dr,
// plus its inverse and the two-ball mass split used by the J_{A,B} problem.

namespace cpld::measure {

/// A centred ball B_R in R^n.
struct BallSpec {
  int n = 2;
  double R = 1.0;
};

/// Surface area of the unit sphere S^{n-1}: 2 pi^{n/2} / Gamma(n/2).
double unit_sphere_area(int n);

/// Weighted volume of B_R. Strictly increasing, phi_volume(n, 0) == 0.
double phi_volume(int n, double R);
inline double phi_volume(BallSpec ball) { return phi_volume(ball.n, ball.R); }

/// d Phi / dR = beta_n e^{R^2/2} R^{n-1}.
double phi_volume_derivative(int n, double R);

/// Radius whose ball carries weighted volume v.
double phi_inverse(int n, double v);

/// A*(R): the ball carrying exactly half the weighted volume of B_R.
double half_mass_radius(int n, double R);

/// Radius B with Phi(A) + Phi(B) = Phi(R). A is clamped to [0, R] when it
/// overshoots by at most kSplitSlack; larger violations throw.
double complement_radius(int n, double R, double A);

inline constexpr double kSplitSlack = 1e-12;

}  // namespace cpld::measure
