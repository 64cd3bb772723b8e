#pragma once

// C(R,n) = min_{A,B} J_{A,B} / Lambda_1(B_R), the lower-bound constant for the
// clamped plate with anti-Gaussian drift, and sweeps of it over R.

#include <span>
#include <vector>

#include "cpld/error.hpp"

namespace cpld::constants {

struct ConstantRecord {
  int n = 2;
  double R = 0.0;
  double Lambda1 = 0.0;
  double lambda1 = 0.0;
  double A_min = 0.0;
  double B_min = 0.0;
  double J_min = 0.0;
  double C = 0.0;      ///< C_raw, snapped to 1 when it exceeds 1 by at most kUnitSlack
  double C_raw = 0.0;  ///< J_min / Lambda1 as computed
  Status status = Status::ok;
};

struct SweepOptions {
  int grid_points = 200;
  bool parallel = false;
};

inline constexpr double kUnitSlack = 1e-8;
inline constexpr double kMinRadius = 1e-3;
inline constexpr int kDefaultSteps = 120;

ConstantRecord c_constant(int n, double R, int grid_points = 200);

/// Radii R_min + i (R_max - R_min) / steps for i = 1..steps, so R_min itself
/// is excluded. Rows are ordered by (n as given, R ascending); solver
/// failures are recorded in the status column.
std::vector<ConstantRecord> sweep(std::span<const int> n_list, double R_min, double R_max, int steps,
                                  const SweepOptions& options = {});

std::vector<double> sweep_radii(double R_min, double R_max, int steps);

}  // namespace cpld::constants
