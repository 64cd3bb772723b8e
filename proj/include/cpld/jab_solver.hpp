#pragma once

// The two-ball relaxation J_{A,B}: its characteristic equation in the
// frequency lambda = sqrt(J) and the minimisation over mass splits
// Phi(A) + Phi(B) = Phi(R).

#include <optional>
#include <vector>

#include "cpld/error.hpp"

namespace cpld::jab {

struct JabSolution {
  double A = 0.0;
  double B = 0.0;
  int n = 2;
  double lambda = 0.0;
  double mu = 0.0;  ///< J_{A,B} = lambda^2
};

struct ProfileSample {
  double A = 0.0;
  double B = 0.0;
  double sqrtJ = 0.0;  ///< NaN unless status == ok
  Status status = Status::ok;
};

struct MinJabRecord {
  double R = 0.0;
  int n = 2;
  double A_star = 0.0;  ///< half-mass radius; the grid spans [0, A_star]
  double A_min = 0.0;
  double B_min = 0.0;
  double J_min = 0.0;
  std::vector<ProfileSample> profile;
};

struct MinimizeOptions {
  int grid_points = 200;
  /// Evaluate grid points on worker threads. Disables root continuation.
  bool parallel = false;
  /// Seed each grid point's root search with the previous point's root.
  bool continuation = true;
};

inline constexpr int kMinGridPoints = 16;
inline constexpr double kGoldenTolerance = 1e-8;
inline constexpr double kTieRelTol = 1e-9;

/// A^n e^{A^2/2} h_A(lambda) M+(-B^2/2) M-(-B^2/2) + (A <-> B) with l = 0
/// parameters M± = M(±lambda/2, n/2, .). A zero radius contributes exactly 0.
double jab_condition(int n, double A, double B, double lambda);

/// Smallest positive root of jab_condition. With a hint, a window around it
/// is searched before the full scan.
JabSolution solve_jab(int n, double A, double B, std::optional<double> lambda_hint = std::nullopt);

/// Grid over A in [0, A*(R)] with B = complement_radius(n, R, A), then
/// golden-section refinement around the best grid cell.
MinJabRecord minimize_jab(int n, double R, const MinimizeOptions& options = {});

}  // namespace cpld::jab
