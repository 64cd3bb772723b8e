// Acceptance checks. One PASS/FAIL line per criterion; the exit status is
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "cpld/ball_spectrum.hpp"
#include "cpld/constants.hpp"
#include "cpld/fd_oracle.hpp"
#include "cpld/jab_solver.hpp"
#include "cpld/kummer.hpp"
#include "cpld/measure.hpp"
#include "sign_change_oracle.hpp"

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(const char* pattern, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

// Shared between criteria 3 and 10 so the sweep runs once.
std::vector<cpld::constants::ConstantRecord> g_sweep;

Verdict unit_constant(int n, std::initializer_list<double> radii) {
  Verdict v;
  double worst = 0.0;
  for (double R : radii) {
    const auto rec = cpld::constants::c_constant(n, R);
    const double dev = std::abs(rec.C - 1.0);
    worst = std::max(worst, dev);
    v.require(dev <= 1e-6, "C(" + fmt("%g", R) + ")=" + fmt("%.10f", rec.C));
  }
  if (v.pass) v.detail = "max |C-1| = " + fmt("%.3g", worst);
  return v;
}

Verdict global_lower_bound() {
  Verdict v;
  const std::vector<int> dims{2, 3, 4, 5};
  g_sweep = cpld::constants::sweep(dims, 0.05, 3.0, 120, {200, true});
  std::vector<double> minima;
  std::string summary;
  for (int n : dims) {
    double lowest = INFINITY, at = 0.0;
    for (const auto& row : g_sweep) {
      if (row.n != n) continue;
      v.require(row.status == cpld::Status::ok, "n=" + std::to_string(n) + " R=" + fmt("%g", row.R) + " failed");
      if (row.C < lowest) {
        lowest = row.C;
        at = row.R;
      }
    }
    minima.push_back(lowest);
    summary += "min C(.," + std::to_string(n) + ")=" + fmt("%.5f", lowest) + "@R=" + fmt("%.3f", at) + " ";
    v.require(lowest >= 0.85 - 1e-3, "n=" + std::to_string(n) + " minimum " + fmt("%.6f", lowest));
  }
  for (std::size_t i = 1; i < minima.size(); ++i)
    v.require(minima[i] >= minima[i - 1], "minimum decreases at n=" + std::to_string(dims[i]));
  v.detail = summary + v.detail;
  return v;
}

Verdict transition(int n, double split_R, double even_R) {
  Verdict v;
  const auto low = cpld::jab::minimize_jab(n, split_R);
  const auto high = cpld::jab::minimize_jab(n, even_R);
  const double r_low = low.A_min / low.A_star, r_high = high.A_min / high.A_star;
  v.require(r_low < 0.1, "A_min/A* at R=" + fmt("%g", split_R) + " is " + fmt("%.4f", r_low));
  v.require(r_high > 0.9, "A_min/A* at R=" + fmt("%g", even_R) + " is " + fmt("%.4f", r_high));
  if (v.pass) v.detail = fmt("ratios %.4f", r_low) + fmt(" / %.4f", r_high);
  return v;
}

Verdict even_split_n4() {
  Verdict v;
  std::string ratios;
  for (double R : {0.1, 3.0}) {
    const auto rec = cpld::jab::minimize_jab(4, R);
    const double ratio = rec.A_min / rec.A_star;
    ratios += fmt("R=%g: ", R) + fmt("%.4f ", ratio);
    v.require(ratio > 0.9, "A_min/A* at R=" + fmt("%g", R) + " is " + fmt("%.4f", ratio));
  }
  if (v.pass) v.detail = ratios;
  return v;
}

Verdict ground_state_order() {
  Verdict v;
  std::vector<double> grid;
  for (int i = 1; i <= 50; ++i) grid.push_back(0.1 + 1.9 * i / 50.0);
  double tightest = INFINITY;
  for (int n : {2, 3}) {
    const auto radial = cpld::ball::eigenvalue_curve(n, 0, grid, true);
    const auto dipole = cpld::ball::eigenvalue_curve(n, 1, grid, true);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const bool ok = radial[i].status == cpld::Status::ok && dipole[i].status == cpld::Status::ok &&
                      radial[i].lambda < dipole[i].lambda;
      v.require(ok, "n=" + std::to_string(n) + " R=" + fmt("%g", grid[i]));
      tightest = std::min(tightest, dipole[i].lambda / radial[i].lambda);
    }
  }
  if (v.pass) v.detail = "min lambda(l=1)/lambda(l=0) = " + fmt("%.4f", tightest);
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  double worst = 0.0;
  for (int n = 2; n <= 5; ++n) {
    for (int l = 0; l <= 1; ++l) {
      for (double R : {0.5, 1.0, 2.0}) {
        const double chf = cpld::ball::lowest_eigenvalue(n, l, R).Lambda;
        const double fd = cpld::fd::fd_lowest_eigenvalue({n, l, R, 4000, cpld::fd::RadialDensity::anti_gaussian()});
        const double rel = std::abs(chf - fd) / chf;
        worst = std::max(worst, rel);
        v.require(rel <= 1e-3, "(" + std::to_string(n) + "," + std::to_string(l) + fmt(",%g)", R) +
                                   fmt(" rel %.3g", rel));
      }
    }
  }
  if (v.pass) v.detail = "max relative difference " + fmt("%.3g", worst);
  return v;
}

Verdict kummer_identities() {
  using namespace cpld::kummer;
  const auto m = [](double a, double b, double z) { return eval_m({a, b}, z).value; };
  Verdict v;
  int cases = 0;
  std::mt19937_64 rng(2024);

  double worst = 0.0;
  std::uniform_real_distribution<double> ua(-6, 6), ub(0.5, 6), uz(-10, 10);
  for (int i = 0; i < 1000; ++i, ++cases) {
    const double a = ua(rng), b = ub(rng), z = uz(rng);
    const double lhs = m(a, b, z);
    worst = std::max(worst, std::abs(lhs - std::exp(z) * m(b - a, b, -z)) / std::max(1.0, std::abs(lhs)));
  }
  v.require(worst <= 1e-10, "transformation " + fmt("%.3g", worst));

  int bad = 0;
  std::uniform_real_distribution<double> da(-5, 5), db(0.5, 5), dz(-5, 5);
  for (int i = 0; i < 500; ++i, ++cases) {
    const double a = da(rng), b = db(rng), z = dz(rng), h = 1e-5;
    const auto central = [&](double s) { return (m(a, b, z + s) - m(a, b, z - s)) / (2 * s); };
    const double fd = (4.0 * central(h) - central(2 * h)) / 3.0;
    const double exact = eval_m_dz({a, b}, z).value;
    if (std::abs(exact - fd) > 1e-6 * std::max(1.0, std::abs(exact))) ++bad;
  }
  v.require(bad == 0, std::to_string(bad) + " derivative mismatches");

  double worst_closed = 0.0;
  for (int i = 0; i < 300; ++i, cases += 2) {
    const double a = ub(rng), z = uz(rng);
    worst_closed = std::max(worst_closed, std::abs(m(a, a, z) / std::exp(z) - 1.0));
    const double want = z == 0.0 ? 1.0 : std::expm1(z) / z;
    worst_closed = std::max(worst_closed, std::abs(m(1.0, 2.0, z) / want - 1.0));
  }
  v.require(worst_closed <= 1e-12, "closed forms " + fmt("%.3g", worst_closed));

  int count_bad = 0;
  std::uniform_real_distribution<double> ca(-6, 6);
  for (int bi = 1; bi <= 12; ++bi) {
    const double b = 0.5 * bi;
    for (int i = 0; i < 3; ++i, cases += 2) {
      const double a = ca(rng);
      if (cpld::test::stable_sign_changes([&](double z) { return m(a, b, z); }) != count_positive_roots({a, b}))
        ++count_bad;
      if (cpld::test::stable_sign_changes([&](double z) { return m(b - a, b, z); }) != count_negative_roots({a, b}))
        ++count_bad;
    }
  }
  v.require(count_bad == 0, std::to_string(count_bad) + " zero-count mismatches");

  v.require(cases >= 1000, "only " + std::to_string(cases) + " cases");
  if (v.pass) {
    v.detail = std::to_string(cases) + " cases; transformation " + fmt("%.3g", worst) + ", closed forms " +
               fmt("%.3g", worst_closed);
  }
  return v;
}

Verdict structural_invariants() {
  Verdict v;
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> ur(0.05, 3.0), ul(0.0, 80.0), uab(0.0, 2.5);
  std::uniform_int_distribution<int> un(2, 5), uo(0, 2);

  int odd_bad = 0;
  for (int i = 0; i < 300; ++i) {
    const int n = un(rng), l = uo(rng);
    const double R = ur(rng), lambda = ul(rng);
    const double p = cpld::ball::secular_h(n, l, R, lambda), q = cpld::ball::secular_h(n, l, R, -lambda);
    if (std::abs(p + q) > 1e-12 * std::max(1.0, std::abs(p))) ++odd_bad;
  }
  v.require(odd_bad == 0, std::to_string(odd_bad) + " h_R oddness failures");

  int jab_bad = 0;
  for (int i = 0; i < 300; ++i) {
    const int n = un(rng);
    const double A = uab(rng), B = uab(rng) + 0.01, lambda = ul(rng);
    const double f = cpld::jab::jab_condition(n, A, B, lambda);
    const double scale = std::max(1e-300, std::abs(f));
    if (std::abs(cpld::jab::jab_condition(n, B, A, lambda) - f) > 1e-12 * scale) ++jab_bad;
    if (std::abs(cpld::jab::jab_condition(n, A, B, -lambda) + f) > 1e-12 * scale) ++jab_bad;
  }
  v.require(jab_bad == 0, std::to_string(jab_bad) + " J condition symmetry/oddness failures");

  int endpoint_bad = 0;
  for (int i = 0; i < 20; ++i) {
    const int n = un(rng);
    const double R = ur(rng);
    const double B = cpld::measure::complement_radius(n, R, 0.0);
    const double J = cpld::jab::solve_jab(n, 0.0, B).mu;
    const double L = cpld::ball::lowest_eigenvalue(n, 0, R).Lambda;
    if (std::abs(J - L) > 1e-9 * L) ++endpoint_bad;
  }
  v.require(endpoint_bad == 0, std::to_string(endpoint_bad) + " endpoint identity failures");

  int c_bad = 0;
  for (const auto& row : g_sweep) {
    if (!(row.C > 0.0 && row.C <= 1.0 + 1e-8 && row.C_raw <= 1.0 + 1e-8)) ++c_bad;
  }
  v.require(!g_sweep.empty(), "no sweep rows to check C bounds");
  v.require(c_bad == 0, std::to_string(c_bad) + " C outside (0, 1+1e-8]");

  int phi_bad = 0;
  for (int i = 0; i < 300; ++i) {
    const int n = un(rng);
    const double R = std::uniform_real_distribution<double>(1e-3, 3.0)(rng);
    if (std::abs(cpld::measure::phi_inverse(n, cpld::measure::phi_volume(n, R)) - R) > 1e-10 * R) ++phi_bad;
    const double closed = 2 * std::numbers::pi * std::expm1(0.5 * R * R);
    if (std::abs(cpld::measure::phi_volume(2, R) - closed) > 1e-12 * closed) ++phi_bad;
  }
  v.require(phi_bad == 0, std::to_string(phi_bad) + " Phi round-trip/closed-form failures");

  if (v.pass) v.detail = "all invariants hold (" + std::to_string(g_sweep.size()) + " sweep rows checked for C)";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "C(R,2) = 1 for R in {0.3, 0.8, 1.2}", [] { return unit_constant(2, {0.3, 0.8, 1.2}); }},
      {2, "C(R,3) = 1 for R in {0.2, 0.45}", [] { return unit_constant(3, {0.2, 0.45}); }},
      {3, "sweep n=2..5, R in (0.05,3]: min C >= 0.849, minimum nondecreasing in n", global_lower_bound},
      {4, "n=2 regime transition between R=1.2 and R=1.25", [] { return transition(2, 1.2, 1.25); }},
      {5, "n=3 regime transition between R=0.5 and R=0.8", [] { return transition(3, 0.5, 0.8); }},
      {6, "n=4 even split at R in {0.1, 3}", even_split_n4},
      {7, "l=0 below l=1 on 50 radii in (0.1, 2], n in {2, 3}", ground_state_order},
      {8, "Kummer eigenvalue vs finite differences (mesh 4000) within 1e-3", oracle_equivalence},
      {9, "Kummer identity suite", kummer_identities},
      {10, "structural invariants", structural_invariants},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass) ++failures;
    std::printf("%s criterion %2d: %s [%s] (%.1f s)\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(),
                seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
