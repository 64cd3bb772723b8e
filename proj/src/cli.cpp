#include "cpld/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "cpld/ball_spectrum.hpp"
#include "cpld/constants.hpp"
#include "cpld/csv_io.hpp"
#include "cpld/error.hpp"
#include "cpld/fd_oracle.hpp"
#include "cpld/jab_solver.hpp"
#include "cpld/kummer.hpp"

namespace cpld::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Raised for arguments that parse but violate a precondition.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv };

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void emit_point(std::ostream& out, Format format, const Json& obj) {
  if (format == Format::json) {
    out << obj.dump() << '\n';
    return;
  }
  std::string header, row;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!header.empty()) {
      header += ',';
      row += ',';
    }
    header += it.key();
    if (it->is_number_float()) row += io::format_real(it->get<double>());
    else if (it->is_null()) row += "nan";
    else if (it->is_string()) row += it->get<std::string>();
    else row += it->dump();
  }
  out << header << '\n' << row << '\n';
}

/// Writes to the named file, or to out when path is empty.
template <class Writer>
void write_table(const std::string& path, std::ostream& out, Writer&& writer) {
  if (path.empty()) {
    writer(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  writer(file);
}

void check_dimension(int n) { require(n >= 2, "--n must be >= 2"); }
void check_radius(double R) {
  require(std::isfinite(R) && R >= ball::kMinRadius, "--R must be >= 1e-3");
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clamped-plate eigenvalues with anti-Gaussian drift and the constants C(R,n)", "cpld"};
  app.require_subcommand(1);

  const std::map<std::string, Format> format_names{{"json", Format::json}, {"csv", Format::csv}};

  int n = 2, l = 0, grid_points = jab::MinimizeOptions{}.grid_points, mesh = 4000, steps = 0;
  double R = 0.0, A = 0.0, B = 0.0;
  std::optional<double> r_min, r_max;
  std::vector<int> n_list{2, 3, 4, 5};
  std::vector<int> l_list{0};
  std::vector<double> r_grid;
  std::string out_path, profile_path, density = "anti-gaussian";
  Format format = Format::json;
  bool parallel = false;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case).description(""))
        ->type_name("json|csv");
  };

  auto* eig = app.add_subcommand("eig", "Lowest clamped eigenvalue of B_R for angular order l");
  eig->add_option("--n", n, "Dimension")->required();
  eig->add_option("--R", R, "Ball radius")->required();
  eig->add_option("--l", l, "Angular order");
  add_format(eig);

  auto* curve = app.add_subcommand("curve", "Lowest lambda along an R grid (CSV: R,l,lambda,status)");
  curve->add_option("--n", n, "Dimension")->required();
  curve->add_option("--l", l_list, "Angular orders, comma separated")->delimiter(',');
  curve->add_option("--R-grid", r_grid, "Explicit radii, comma separated")->delimiter(',');
  curve->add_option("--r-min", r_min, "First radius of a uniform grid");
  curve->add_option("--r-max", r_max, "Last radius of a uniform grid");
  curve->add_option("--steps", steps, "Number of radii in the uniform grid");
  curve->add_option("--out", out_path, "Output CSV path (default: standard output)");
  curve->add_flag("--parallel", parallel, "Evaluate grid points on worker threads");

  auto* jab_cmd = app.add_subcommand("jab", "Solve the J_{A,B} characteristic equation");
  jab_cmd->add_option("--n", n, "Dimension")->required();
  jab_cmd->add_option("--A", A, "First radius")->required();
  jab_cmd->add_option("--B", B, "Second radius")->required();
  add_format(jab_cmd);

  auto* minjab = app.add_subcommand("minjab", "Minimise J_{A,B} over mass splits of B_R");
  minjab->add_option("--n", n, "Dimension")->required();
  minjab->add_option("--R", R, "Ball radius")->required();
  minjab->add_option("--grid-points", grid_points, "Uniform A grid size over [0, A*(R)]");
  minjab->add_option("--profile", profile_path, "Write the (A, B, sqrtJ) profile CSV here");
  minjab->add_flag("--parallel", parallel, "Evaluate grid points on worker threads");
  add_format(minjab);

  auto* constant = app.add_subcommand("const", "The constant C(R,n)");
  constant->add_option("--n", n, "Dimension")->required();
  constant->add_option("--R", R, "Ball radius")->required();
  constant->add_option("--grid-points", grid_points, "Uniform A grid size over [0, A*(R)]");
  add_format(constant);

  auto* sweep_cmd = app.add_subcommand("sweep", "C(R,n) over a uniform R grid (CSV)");
  sweep_cmd->add_option("--n", n_list, "Dimensions, comma separated")->delimiter(',');
  sweep_cmd->add_option("--r-min", r_min, "Grid starts one step above this radius");
  sweep_cmd->add_option("--r-max", r_max, "Last radius");
  sweep_cmd->add_option("--steps", steps, "Number of radii");
  sweep_cmd->add_option("--grid-points", grid_points, "Uniform A grid size over [0, A*(R)]");
  sweep_cmd->add_option("--out", out_path, "Output CSV path (default: standard output)");
  sweep_cmd->add_flag("--parallel", parallel, "Evaluate rows on worker threads");

  auto* oracle = app.add_subcommand("oracle", "Finite-difference lowest eigenvalue of the radial problem");
  oracle->add_option("--n", n, "Dimension")->required();
  oracle->add_option("--R", R, "Ball radius")->required();
  oracle->add_option("--l", l, "Angular order");
  oracle->add_option("--mesh", mesh, "Interior grid nodes");
  oracle->add_option("--density", density, "anti-gaussian or flat")
      ->check(CLI::IsMember({"anti-gaussian", "flat"}));
  add_format(oracle);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    kummer::Precision precision;
    require(kummer::parse_precision(std::getenv("CPLD_PRECISION"), precision),
            "CPLD_PRECISION must be 'double' or 'extended'");

    if (eig->parsed()) {
      check_dimension(n);
      check_radius(R);
      require(l >= 0, "--l must be >= 0");
      const ball::SpectralMode m = ball::lowest_eigenvalue(n, l, R);
      emit_point(out, format,
                 Json{{"n", n}, {"R", R}, {"l", l}, {"lambda", m.lambda}, {"Lambda", m.Lambda}, {"G_R", m.G_R}});
    } else if (curve->parsed()) {
      check_dimension(n);
      for (int ll : l_list) require(ll >= 0, "--l entries must be >= 0");
      if (r_grid.empty()) {
        require(r_min && r_max && steps >= 2, "curve needs --R-grid or --r-min, --r-max and --steps >= 2");
        require(*r_max > *r_min, "--r-max must exceed --r-min");
        for (int i = 0; i < steps; ++i)
          r_grid.push_back(i == steps - 1 ? *r_max : *r_min + (*r_max - *r_min) * i / (steps - 1));
      }
      for (std::size_t i = 0; i < r_grid.size(); ++i) {
        check_radius(r_grid[i]);
        require(i == 0 || r_grid[i] > r_grid[i - 1], "radii must be strictly increasing");
      }
      std::vector<io::CurveRow> rows;
      for (int ll : l_list) {
        for (const ball::CurvePoint& p : ball::eigenvalue_curve(n, ll, r_grid, parallel))
          rows.push_back({p.R, ll, p.lambda, p.status});
      }
      write_table(out_path, out, [&](std::ostream& os) { io::write_curve(os, rows); });
    } else if (jab_cmd->parsed()) {
      check_dimension(n);
      require(std::isfinite(A) && std::isfinite(B) && A >= 0.0 && B >= 0.0 && A + B > 0.0,
              "--A and --B must be >= 0 and not both 0");
      require(std::max(A, B) >= ball::kMinRadius, "max(--A, --B) must be >= 1e-3");
      const jab::JabSolution s = jab::solve_jab(n, A, B);
      emit_point(out, format, Json{{"n", n}, {"A", A}, {"B", B}, {"lambda", s.lambda}, {"mu", s.mu}});
    } else if (minjab->parsed()) {
      check_dimension(n);
      check_radius(R);
      require(grid_points >= jab::kMinGridPoints, "--grid-points must be >= 16");
      jab::MinimizeOptions opts;
      opts.grid_points = grid_points;
      opts.parallel = parallel;
      const jab::MinJabRecord rec = jab::minimize_jab(n, R, opts);
      if (!profile_path.empty())
        write_table(profile_path, out, [&](std::ostream& os) { io::write_profile(os, rec.profile); });
      emit_point(out, format,
                 Json{{"n", n}, {"R", R}, {"A_star", rec.A_star}, {"A_min", rec.A_min}, {"B_min", rec.B_min},
                      {"J_min", rec.J_min}, {"sqrtJ_min", std::sqrt(rec.J_min)}});
    } else if (constant->parsed()) {
      check_dimension(n);
      check_radius(R);
      require(grid_points >= jab::kMinGridPoints, "--grid-points must be >= 16");
      const constants::ConstantRecord r = constants::c_constant(n, R, grid_points);
      emit_point(out, format,
                 Json{{"n", r.n}, {"R", r.R}, {"Lambda1", r.Lambda1}, {"lambda1", r.lambda1}, {"A_min", r.A_min},
                      {"B_min", r.B_min}, {"J_min", r.J_min}, {"C", r.C}, {"C_raw", r.C_raw},
                      {"status", std::string(to_string(r.status))}});
    } else if (sweep_cmd->parsed()) {
      for (int nn : n_list) check_dimension(nn);
      const double lo = r_min.value_or(0.05);
      const double hi = r_max.value_or(3.0);
      if (steps == 0) steps = constants::kDefaultSteps;
      require(lo >= constants::kMinRadius && hi > lo, "sweep needs 1e-3 <= --r-min < --r-max");
      require(steps >= 2, "--steps must be >= 2");
      require(grid_points >= jab::kMinGridPoints, "--grid-points must be >= 16");
      constants::SweepOptions opts;
      opts.grid_points = grid_points;
      opts.parallel = parallel;
      const auto rows = constants::sweep(n_list, lo, hi, steps, opts);
      write_table(out_path, out, [&](std::ostream& os) { io::write_constants(os, rows); });
    } else if (oracle->parsed()) {
      check_dimension(n);
      require(std::isfinite(R) && R > 0.0, "--R must be > 0");
      require(l >= 0, "--l must be >= 0");
      require(mesh >= fd::kMinMesh, "--mesh must be >= 64");
      fd::FdProblem p;
      p.n = n;
      p.l = l;
      p.R = R;
      p.mesh = mesh;
      p.density = density == "flat" ? fd::RadialDensity::flat() : fd::RadialDensity::anti_gaussian();
      const double Lambda = fd::fd_lowest_eigenvalue(p);
      emit_point(out, format,
                 Json{{"n", n}, {"R", R}, {"l", l}, {"mesh", mesh}, {"density", density}, {"Lambda", Lambda}});
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "solver error: " << e.what() << '\n';
    return kExitSolver;
  }
  return kExitOk;
}

}  // namespace cpld::cli
