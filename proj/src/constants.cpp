#include "cpld/constants.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cpld/ball_spectrum.hpp"
#include "cpld/jab_solver.hpp"
#include "cpld/parallel.hpp"

namespace cpld::constants {

ConstantRecord c_constant(int n, double R, int grid_points) {
  if (n < 2) throw std::invalid_argument("dimension n must be >= 2");
  if (!(R >= kMinRadius) || !std::isfinite(R)) throw std::invalid_argument("radius R must be >= 1e-3");

  const ball::SpectralMode mode = ball::lowest_eigenvalue(n, 0, R);
  jab::MinimizeOptions opts;
  opts.grid_points = grid_points;
  const jab::MinJabRecord min = jab::minimize_jab(n, R, opts);

  ConstantRecord rec;
  rec.n = n;
  rec.R = R;
  rec.Lambda1 = mode.Lambda;
  rec.lambda1 = mode.lambda;
  rec.A_min = min.A_min;
  rec.B_min = min.B_min;
  rec.J_min = min.J_min;
  rec.C_raw = min.J_min / mode.Lambda;
  rec.C = (rec.C_raw > 1.0 && rec.C_raw <= 1.0 + kUnitSlack) ? 1.0 : rec.C_raw;
  return rec;
}

std::vector<double> sweep_radii(double R_min, double R_max, int steps) {
  if (!(R_min >= kMinRadius) || !(R_max > R_min)) throw std::invalid_argument("sweep needs 1e-3 <= R_min < R_max");
  if (steps < 2) throw std::invalid_argument("sweep needs steps >= 2");
  std::vector<double> radii(steps);
  const double h = (R_max - R_min) / steps;
  for (int i = 1; i <= steps; ++i) radii[i - 1] = (i == steps) ? R_max : R_min + i * h;
  return radii;
}

std::vector<ConstantRecord> sweep(std::span<const int> n_list, double R_min, double R_max, int steps,
                                  const SweepOptions& options) {
  for (int n : n_list)
    if (n < 2) throw std::invalid_argument("dimension n must be >= 2");
  const std::vector<double> radii = sweep_radii(R_min, R_max, steps);
  std::vector<ConstantRecord> rows(n_list.size() * radii.size());
  parallel_for(rows.size(), options.parallel, [&](std::size_t k) {
    const int n = n_list[k / radii.size()];
    const double R = radii[k % radii.size()];
    try {
      rows[k] = c_constant(n, R, options.grid_points);
    } catch (const Error& e) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      rows[k] = {n, R, nan, nan, nan, nan, nan, nan, nan,
                 dynamic_cast<const NoRootFound*>(&e) ? Status::no_root : Status::nonconvergent};
    }
  });
  return rows;
}

}  // namespace cpld::constants
