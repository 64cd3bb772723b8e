#include "cpld/jab_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cpld/ball_spectrum.hpp"
#include "cpld/kummer.hpp"
#include "cpld/lambda_scan.hpp"
#include "cpld/measure.hpp"
#include "cpld/parallel.hpp"

namespace cpld::jab {

namespace {

void check_radii(int n, double A, double B) {
  if (n < 2) throw std::invalid_argument("dimension n must be >= 2");
  if (!(A >= 0.0) || !(B >= 0.0) || !std::isfinite(A) || !std::isfinite(B))
    throw std::invalid_argument("radii A, B must be finite and >= 0");
  if (A == 0.0 && B == 0.0) throw std::invalid_argument("radii A and B cannot both be 0");
}

double m_product(int n, double r, double lambda) {
  const double z = -0.5 * r * r;
  return kummer::eval_m({0.5 * lambda, 0.5 * n}, z).value *
         kummer::eval_m({-0.5 * lambda, 0.5 * n}, z).value;
}

double ball_term(int n, double own, double other, double lambda) {
  if (own == 0.0) return 0.0;
  const double weight = std::pow(own, n) * std::exp(0.5 * own * own);
  const double h = ball::secular_h(n, 0, own, lambda);
  return weight * h * (other == 0.0 ? 1.0 : m_product(n, other, lambda));
}

struct Evaluated {
  double sqrtJ;
  Status status;
};

Evaluated evaluate(int n, double A, double B, std::optional<double> hint) {
  try {
    return {solve_jab(n, A, B, hint).lambda, Status::ok};
  } catch (const NoRootFound&) {
    return {std::numeric_limits<double>::quiet_NaN(), Status::no_root};
  } catch (const NonConvergent&) {
    return {std::numeric_limits<double>::quiet_NaN(), Status::nonconvergent};
  }
}

}  // namespace

double jab_condition(int n, double A, double B, double lambda) {
  check_radii(n, A, B);
  return ball_term(n, A, B, lambda) + ball_term(n, B, A, lambda);
}

JabSolution solve_jab(int n, double A, double B, std::optional<double> lambda_hint) {
  check_radii(n, A, B);
  const auto f = [=](double lambda) { return jab_condition(n, A, B, lambda); };
  const LambdaScan scan = lambda_scan_for_radius(std::max(A, B));
  std::optional<double> lambda;
  if (lambda_hint && *lambda_hint > 0.0) lambda = root_near(f, scan, *lambda_hint);
  if (!lambda) lambda = smallest_positive_root(f, scan, "J_{A,B} characteristic equation");
  return {A, B, n, *lambda, *lambda * *lambda};
}

MinJabRecord minimize_jab(int n, double R, const MinimizeOptions& options) {
  if (options.grid_points < kMinGridPoints) throw std::invalid_argument("grid_points must be >= 16");
  if (!(R > 0.0)) throw std::invalid_argument("radius R must be > 0");

  MinJabRecord rec;
  rec.R = R;
  rec.n = n;
  rec.A_star = measure::half_mass_radius(n, R);

  const int count = options.grid_points;
  rec.profile.resize(count);
  for (int i = 0; i < count; ++i) {
    ProfileSample& s = rec.profile[i];
    if (i == 0) {
      s.A = 0.0;
      s.B = R;
    } else if (i == count - 1) {
      s.A = s.B = rec.A_star;
    } else {
      s.A = rec.A_star * double(i) / double(count - 1);
      s.B = measure::complement_radius(n, R, s.A);
    }
  }

  if (options.parallel || !options.continuation) {
    parallel_for(rec.profile.size(), options.parallel, [&](std::size_t i) {
      ProfileSample& s = rec.profile[i];
      const Evaluated e = evaluate(n, s.A, s.B, std::nullopt);
      s.sqrtJ = e.sqrtJ;
      s.status = e.status;
    });
  } else {
    std::optional<double> hint;
    for (ProfileSample& s : rec.profile) {
      const Evaluated e = evaluate(n, s.A, s.B, hint);
      s.sqrtJ = e.sqrtJ;
      s.status = e.status;
      hint = e.status == Status::ok ? std::optional<double>(e.sqrtJ) : std::nullopt;
    }
  }

  int best = -1;
  for (int i = 0; i < count; ++i) {
    const ProfileSample& s = rec.profile[i];
    if (s.status != Status::ok) continue;
    if (best < 0 || s.sqrtJ < rec.profile[best].sqrtJ) best = i;
  }
  if (best < 0) throw NoRootFound("minimize_jab: no grid point produced a root");

  struct Candidate {
    double A, B, sqrtJ;
  };
  std::vector<Candidate> candidates;
  const ProfileSample& grid_best = rec.profile[best];
  candidates.push_back({grid_best.A, grid_best.B, grid_best.sqrtJ});

  const double lo = rec.profile[std::max(best - 1, 0)].A;
  const double hi = rec.profile[std::min(best + 1, count - 1)].A;
  const double hint = grid_best.sqrtJ;
  const auto objective = [&](double A) {
    const double B = measure::complement_radius(n, R, A);
    const Evaluated e = evaluate(n, A, B, hint);
    return e.status == Status::ok ? e.sqrtJ : std::numeric_limits<double>::infinity();
  };
  if (hi > lo) {
    const roots::Minimum m = roots::golden_section(objective, lo, hi, kGoldenTolerance);
    if (std::isfinite(m.fx)) candidates.push_back({m.x, measure::complement_radius(n, R, m.x), m.fx});
  }

  double min_sqrtJ = candidates.front().sqrtJ;
  for (const Candidate& c : candidates) min_sqrtJ = std::min(min_sqrtJ, c.sqrtJ);
  const double min_J = min_sqrtJ * min_sqrtJ;
  // Among values tied with the minimum, the smallest A wins.
  const Candidate* chosen = nullptr;
  for (const Candidate& c : candidates) {
    if (c.sqrtJ * c.sqrtJ <= min_J * (1.0 + kTieRelTol) && (!chosen || c.A < chosen->A)) chosen = &c;
  }
  rec.A_min = chosen->A;
  rec.B_min = chosen->B;
  rec.J_min = min_J;
  return rec;
}

}  // namespace cpld::jab
