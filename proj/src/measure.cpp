#include "cpld/measure.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cpld::measure {

namespace {

constexpr double kQuadratureTolerance = 1e-13;
constexpr int kMaxNewtonIterations = 200;

void check_dimension(int n) {
  if (n < 2) throw std::invalid_argument("dimension n must be >= 2");
}

}  // namespace

double unit_sphere_area(int n) {
  check_dimension(n);
  return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

namespace {

// Weighted volume of the shell lo < |x| < hi.
double shell_volume(int n, double lo, double hi) {
  const auto integrand = [n](double r) { return std::exp(0.5 * r * r) * std::pow(r, n - 1); };
  double error = 0.0;
  const double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      integrand, lo, hi, 15, kQuadratureTolerance, &error);
  return unit_sphere_area(n) * integral;
}

}  // namespace

double phi_volume(int n, double R) {
  check_dimension(n);
  if (!(R >= 0.0) || !std::isfinite(R)) throw std::invalid_argument("radius must be finite and >= 0");
  if (R == 0.0) return 0.0;
  return shell_volume(n, 0.0, R);
}

double phi_volume_derivative(int n, double R) {
  return unit_sphere_area(n) * std::exp(0.5 * R * R) * std::pow(R, n - 1);
}

// Safeguarded Newton on Phi(R) = v. The bracket [lo, hi] always holds the
// root; a Newton step leaving it is replaced by bisection.
double phi_inverse(int n, double v) {
  check_dimension(n);
  if (!(v >= 0.0) || !std::isfinite(v)) throw std::invalid_argument("volume must be finite and >= 0");
  if (v == 0.0) return 0.0;

  double lo = 0.0;
  double hi = 1.0;
  while (phi_volume(n, hi) < v) {
    lo = hi;
    hi *= 2.0;
  }

  double R = 0.5 * (lo + hi);
  for (int it = 0; it < kMaxNewtonIterations; ++it) {
    const double f = phi_volume(n, R) - v;
    if (f == 0.0) return R;
    if (f > 0.0) hi = R; else lo = R;
    double next = R - f / phi_volume_derivative(n, R);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - R) <= 4.0 * std::numeric_limits<double>::epsilon() * R) return next;
    if (hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * hi) return next;
    R = next;
  }
  return R;
}

double half_mass_radius(int n, double R) {
  if (!(R > 0.0)) throw std::invalid_argument("half_mass_radius requires R > 0");
  return phi_inverse(n, 0.5 * phi_volume(n, R));
}

double complement_radius(int n, double R, double A) {
  if (!(R > 0.0)) throw std::invalid_argument("complement_radius requires R > 0");
  if (A < -kSplitSlack || A > R + kSplitSlack || std::isnan(A)) {
    std::ostringstream msg;
    msg << "split radius A=" << A << " outside [0, " << R << "]";
    throw std::invalid_argument(msg.str());
  }
  if (A <= 0.0) return R;
  if (A >= R) return 0.0;
  return phi_inverse(n, shell_volume(n, A, R));
}

}  // namespace cpld::measure
