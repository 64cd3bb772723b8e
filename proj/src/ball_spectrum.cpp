#include "cpld/ball_spectrum.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "cpld/kummer.hpp"
#include "cpld/lambda_scan.hpp"
#include "cpld/parallel.hpp"

namespace cpld::ball {

namespace {

using kummer::KummerParams;

void check_args(int n, int l, double R) {
  if (n < 2) throw std::invalid_argument("dimension n must be >= 2");
  if (l < 0) throw std::invalid_argument("angular order l must be >= 0");
  if (!(R > 0.0) || !std::isfinite(R)) throw std::invalid_argument("radius R must be > 0");
}

KummerParams plus_params(int n, int l, double lambda) { return {0.5 * (l + lambda), 0.5 * n + l}; }
KummerParams minus_params(int n, int l, double lambda) { return {0.5 * (l - lambda), 0.5 * n + l}; }

}  // namespace

double secular_h(int n, int l, double R, double lambda) {
  check_args(n, l, R);
  const double z = -0.5 * R * R;
  const KummerParams plus = plus_params(n, l, lambda);
  const KummerParams minus = minus_params(n, l, lambda);
  const double m_plus = kummer::eval_m(plus, z).value;
  const double m_minus = kummer::eval_m(minus, z).value;
  const double dm_plus = kummer::eval_m_dz(plus, z).value;
  const double dm_minus = kummer::eval_m_dz(minus, z).value;
  return dm_plus * m_minus - dm_minus * m_plus;
}

double closure_constant(int n, int l, double R, double lambda) {
  check_args(n, l, R);
  const double z = -0.5 * R * R;
  return -kummer::eval_m(plus_params(n, l, lambda), z).value /
         kummer::eval_m(minus_params(n, l, lambda), z).value;
}

SpectralMode lowest_eigenvalue(int n, int l, double R) {
  check_args(n, l, R);
  if (R < kMinRadius) {
    std::ostringstream msg;
    msg << "radius " << R << " below the supported minimum " << kMinRadius;
    throw std::invalid_argument(msg.str());
  }
  const auto h = [=](double lambda) { return secular_h(n, l, R, lambda); };
  const double lambda = smallest_positive_root(h, lambda_scan_for_radius(R), "ball secular equation");
  return {l, lambda, lambda * lambda, closure_constant(n, l, R, lambda)};
}

std::vector<CurvePoint> eigenvalue_curve(int n, int l, std::span<const double> R_grid, bool parallel) {
  for (std::size_t i = 0; i < R_grid.size(); ++i) {
    if (!(R_grid[i] > 0.0)) throw std::invalid_argument("curve radii must be > 0");
    if (i > 0 && !(R_grid[i] > R_grid[i - 1])) throw std::invalid_argument("curve radii must be strictly increasing");
  }
  std::vector<CurvePoint> out(R_grid.size());
  parallel_for(R_grid.size(), parallel, [&](std::size_t i) {
    CurvePoint& p = out[i];
    p.R = R_grid[i];
    try {
      p.lambda = lowest_eigenvalue(n, l, p.R).lambda;
    } catch (const NoRootFound&) {
      p.lambda = std::numeric_limits<double>::quiet_NaN();
      p.status = Status::no_root;
    } catch (const NonConvergent&) {
      p.lambda = std::numeric_limits<double>::quiet_NaN();
      p.status = Status::nonconvergent;
    }
  });
  return out;
}

RadialProfile eigenfunction_profile(const SpectralMode& mode, int n, double R, int samples) {
  check_args(n, mode.l, R);
  if (samples < 2) throw std::invalid_argument("eigenfunction_profile needs at least 2 samples");
  const KummerParams plus = plus_params(n, mode.l, mode.lambda);
  const KummerParams minus = minus_params(n, mode.l, mode.lambda);
  RadialProfile prof;
  prof.radii.resize(samples);
  prof.values.resize(samples);
  for (int i = 0; i < samples; ++i) {
    const double r = (i == samples - 1) ? R : R * double(i) / double(samples - 1);
    const double z = -0.5 * r * r;
    const double radial = kummer::eval_m(plus, z).value + mode.G_R * kummer::eval_m(minus, z).value;
    prof.radii[i] = r;
    prof.values[i] = std::pow(r, mode.l) * radial;
  }
  return prof;
}

}  // namespace cpld::ball
