#include "cpld/fd_oracle.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cpld/error.hpp"

namespace cpld::fd {

namespace {

// One row of the discrete drift operator: coefficients on y_{first..first+2}.
struct StencilRow {
  int first;
  std::array<double, 3> coef;
  double weight;
};

// Symmetric pentadiagonal matrix stored by diagonals, factorised in place as U^T U.
struct Pentadiagonal {
  std::vector<double> d0, d1, d2;

  explicit Pentadiagonal(std::size_t n) : d0(n, 0.0), d1(n, 0.0), d2(n, 0.0) {}

  void add(int j, int k, double v) {
    if (k < j) std::swap(j, k);
    switch (k - j) {
      case 0: d0[j] += v; break;
      case 1: d1[j] += v; break;
      case 2: d2[j] += v; break;
      default: throw std::logic_error("pentadiagonal: entry outside band");
    }
  }

  void factorize() {
    const std::size_t n = d0.size();
    for (std::size_t j = 0; j < n; ++j) {
      double diag = d0[j];
      if (j >= 1) diag -= d1[j - 1] * d1[j - 1];
      if (j >= 2) diag -= d2[j - 2] * d2[j - 2];
      if (!(diag > 0.0)) throw NonConvergent("fd_oracle: stiffness matrix is not positive definite");
      d0[j] = std::sqrt(diag);
      if (j + 1 < n) {
        double off = d1[j];
        if (j >= 1) off -= d1[j - 1] * d2[j - 1];
        d1[j] = off / d0[j];
      }
      if (j + 2 < n) d2[j] /= d0[j];
    }
  }

  void solve(std::vector<double>& x) const {
    const std::size_t n = d0.size();
    for (std::size_t j = 0; j < n; ++j) {
      double v = x[j];
      if (j >= 1) v -= d1[j - 1] * x[j - 1];
      if (j >= 2) v -= d2[j - 2] * x[j - 2];
      x[j] = v / d0[j];
    }
    for (std::size_t jj = n; jj-- > 0;) {
      double v = x[jj];
      if (jj + 1 < n) v -= d1[jj] * x[jj + 1];
      if (jj + 2 < n) v -= d2[jj] * x[jj + 2];
      x[jj] = v / d0[jj];
    }
  }
};

void validate(const FdProblem& p) {
  if (p.n < 2) throw std::invalid_argument("fd_oracle: n must be >= 2");
  if (p.l < 0) throw std::invalid_argument("fd_oracle: l must be >= 0");
  if (!(p.R > 0.0)) throw std::invalid_argument("fd_oracle: R must be > 0");
  if (p.mesh < kMinMesh) throw std::invalid_argument("fd_oracle: mesh must be >= 64");
  if (!p.density.phi || !p.density.dphi) throw std::invalid_argument("fd_oracle: density functions missing");
  if (std::abs(p.density.dphi(0.0)) > 1e-12) throw std::invalid_argument("fd_oracle: phi must be even (phi'(0) = 0)");
}

std::vector<StencilRow> drift_operator(const FdProblem& p, double h) {
  const int N = p.mesh;
  const double inv_h2 = 1.0 / (h * h);
  const double k = double(p.l) * (p.l + p.n - 2);
  const double parity = (p.l % 2 == 0) ? 1.0 : -1.0;
  std::vector<StencilRow> rows;
  rows.reserve(N + 1);
  for (int i = 1; i <= N; ++i) {
    const double r = (i - 0.5) * h;
    const double drift = (p.n - 1) / r + p.density.dphi(r);
    double lower = inv_h2 - drift / (2.0 * h);
    double diag = -2.0 * inv_h2 - k / (r * r);
    double upper = (i < N) ? inv_h2 + drift / (2.0 * h) : 0.0;
    const double weight = std::pow(r, p.n - 1) * std::exp(p.density.phi(r)) * h;
    if (i == 1) {
      diag += parity * lower;
      rows.push_back({0, {diag, upper, 0.0}, weight});
    } else {
      rows.push_back({i - 2, {lower, diag, upper}, weight});
    }
  }
  // Boundary node r = R: y = 0 there and the ghost mirrors y_N.
  const double weight_R = std::pow(p.R, p.n - 1) * std::exp(p.density.phi(p.R)) * 0.5 * h;
  rows.push_back({N - 1, {2.0 * inv_h2, 0.0, 0.0}, weight_R});
  return rows;
}

double rayleigh_numerator(const std::vector<StencilRow>& rows, const std::vector<double>& y) {
  const int N = int(y.size());
  double sum = 0.0;
  for (const StencilRow& row : rows) {
    double v = 0.0;
    for (int c = 0; c < 3; ++c) {
      const int j = row.first + c;
      if (j < N) v += row.coef[c] * y[j];
    }
    sum += row.weight * v * v;
  }
  return sum;
}

}  // namespace

RadialDensity RadialDensity::anti_gaussian() {
  return {[](double r) { return 0.5 * r * r; }, [](double r) { return r; }};
}

RadialDensity RadialDensity::flat() {
  return {[](double) { return 0.0; }, [](double) { return 0.0; }};
}

double fd_lowest_eigenvalue(const FdProblem& p) {
  validate(p);
  const int N = p.mesh;
  const double h = p.R / (N + 0.5);
  const std::vector<StencilRow> rows = drift_operator(p, h);

  Pentadiagonal K(N);
  for (const StencilRow& row : rows) {
    for (int a = 0; a < 3; ++a) {
      for (int b = a; b < 3; ++b) {
        const int ja = row.first + a, jb = row.first + b;
        if (ja >= N || jb >= N) continue;
        K.add(ja, jb, row.weight * row.coef[a] * row.coef[b]);
      }
    }
  }
  K.factorize();

  std::vector<double> mass(N);
  std::vector<double> y(N);
  for (int i = 0; i < N; ++i) {
    const double r = (i + 0.5) * h;
    mass[i] = std::pow(r, p.n - 1) * std::exp(p.density.phi(r)) * h;
    y[i] = (p.R - r) * (p.R - r) * std::pow(r, p.l);
  }

  double previous = 0.0;
  for (int it = 0; it < kMaxInverseIterations; ++it) {
    for (int i = 0; i < N; ++i) y[i] *= mass[i];
    K.solve(y);
    double norm2 = 0.0;
    for (int i = 0; i < N; ++i) norm2 += mass[i] * y[i] * y[i];
    const double scale = 1.0 / std::sqrt(norm2);
    for (double& v : y) v *= scale;
    const double rho = rayleigh_numerator(rows, y);
    if (it > 0 && std::abs(rho - previous) <= kInverseIterationTol * rho) return rho;
    previous = rho;
  }
  throw NonConvergent("fd_oracle: inverse iteration did not settle");
}

}  // namespace cpld::fd
