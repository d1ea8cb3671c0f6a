// Command-line front end: every computation of the library is exposed as a
// subcommand with JSON configuration, flag overrides and CSV/JSON reports.
// Exit codes: 0 all checks pass, 1 numeric failure (diagnostics written),
// 2 usage/config error.

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sfk/asymptotics.hpp"
#include "sfk/curvature.hpp"
#include "sfk/cylinder.hpp"
#include "sfk/gluing.hpp"
#include "sfk/lambert.hpp"
#include "sfk/momentum.hpp"
#include "sfk/parallel.hpp"
#include "sfk/spectral.hpp"
#include "sfk/topology.hpp"
#include "sfk/weighted.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Failure {
  std::string check;
  std::string detail;
};

class Report {
 public:
  Report(fs::path out_dir) : dir_(std::move(out_dir)) { fs::create_directories(dir_); }

  void fail(const std::string& check, const std::string& detail) {
    failures_.push_back({check, detail});
  }
  bool ok() const { return failures_.empty(); }

  void write_json(const std::string& name, const ordered_json& j) const {
    std::ofstream out(dir_ / name);
    out << j.dump(2) << "\n";
  }
  void write_text(const std::string& name, const std::string& text) const {
    std::ofstream out(dir_ / name);
    out << text;
  }

  int finish() const {
    if (ok()) return 0;
    ordered_json j;
    j["failures"] = ordered_json::array();
    for (const auto& f : failures_) j["failures"].push_back({{"check", f.check}, {"detail", f.detail}});
    write_json("failures.json", j);
    for (const auto& f : failures_) std::cerr << "FAIL " << f.check << ": " << f.detail << "\n";
    return 1;
  }

 private:
  fs::path dir_;
  std::vector<Failure> failures_;
};

sfk::MomentumProfile make_profile(int n, int k, const sfk::Rational& beta) {
  if (n == 2) return sfk::profile_cp1(k, beta);
  if (beta != 0)
    throw CLI::ValidationError("--beta", "cone parameter applies to the n = 2 family only");
  return sfk::profile_cpn(n, -static_cast<long>(k));
}

ordered_json profile_json(const sfk::MomentumProfile& p) {
  ordered_json j;
  j["m"] = p.base_dim;
  j["k"] = p.bundle_k;
  j["beta"] = sfk::to_string(p.cone_beta);
  j["normalization"] =
      p.normalization == sfk::BaseNormalization::cp1_twisted ? "cp1-twisted" : "cpn-fubini-study";
  return j;
}

// ---------------------------------------------------------------------------

int run_profile(const sfk::MomentumProfile& p, double grid_min, double grid_max, int grid_points,
                Report& report) {
  report.write_json("profile.json", profile_json(p));
  std::string csv = "tau,phi,Q,scal_base\n";
  double min_phi = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid_points; ++i) {
    const double tau =
        grid_min * std::pow(grid_max / grid_min, static_cast<double>(i) / (grid_points - 1));
    const double phi = p.phi.eval(tau);
    min_phi = std::min(min_phi, phi);
    csv += fmt(tau) + "," + fmt(phi) + "," + fmt(p.Q.eval(tau)) + "," +
           fmt(p.scal_base.eval(tau)) + "\n";
  }
  report.write_text("profile_grid.csv", csv);
  if (!(min_phi > 0.0)) report.fail("profile-positivity", "phi is not positive on the grid");
  return report.finish();
}

int run_check_sfk(const sfk::MomentumProfile& p, double grid_min, double grid_max,
                  int grid_points, double tol_residual, double tol_oracle, int oracle_points,
                  long seed, Report& report) {
  std::vector<double> taus(grid_points);
  for (int i = 0; i < grid_points; ++i)
    taus[i] = grid_min * std::pow(grid_max / grid_min, static_cast<double>(i) / (grid_points - 1));

  std::vector<double> residuals(taus.size());
  sfk::parallel_for(taus.size(),
                    [&](std::size_t i) { residuals[i] = sfk::scalar_curvature_momentum(p, taus[i]); });

  // randomized oracle spot checks on the same range
  std::mt19937 rng(static_cast<std::uint32_t>(seed));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> oracle_taus(oracle_points);
  for (auto& t : oracle_taus) t = grid_min * std::pow(grid_max / grid_min, unit(rng));
  std::vector<double> oracle_gaps(oracle_taus.size());
  std::vector<sfk::CurvatureReport> oracle_reports(oracle_taus.size());
  auto pot = sfk::potential_from_profile(p);
  sfk::parallel_for(oracle_taus.size(), [&](std::size_t i) {
    const double tau = oracle_taus[i];
    const double r = sfk::radial_log_coordinate(p, tau);
    const double rho = std::exp(2.0 * r / p.bundle_k);
    oracle_reports[i] = sfk::scalar_curvature_radial(pot, rho);
    oracle_gaps[i] = std::abs(sfk::scalar_curvature_momentum(p, tau) - oracle_reports[i].scalar);
  });

  std::string csv = "tau,residual\n";
  double max_resid = 0.0;
  for (std::size_t i = 0; i < taus.size(); ++i) {
    csv += fmt(taus[i]) + "," + fmt(residuals[i]) + "\n";
    max_resid = std::max(max_resid, std::abs(residuals[i]));
  }
  report.write_text("residuals.csv", csv);

  std::string oracle_csv = "tau,oracle_gap\n";
  std::string curvature_csv = "rho,scalar,det_g,margin_first,margin_mixed\n";
  double max_gap = 0.0;
  for (std::size_t i = 0; i < oracle_taus.size(); ++i) {
    oracle_csv += fmt(oracle_taus[i]) + "," + fmt(oracle_gaps[i]) + "\n";
    max_gap = std::max(max_gap, oracle_gaps[i]);
    const auto& r = oracle_reports[i];
    curvature_csv += fmt(r.rho) + "," + fmt(r.scalar) + "," + fmt(r.det_g) + "," +
                     fmt(r.margin_first) + "," + fmt(r.margin_mixed) + "\n";
  }
  report.write_text("oracle_gaps.csv", oracle_csv);
  report.write_text("curvature.csv", curvature_csv);

  ordered_json j;
  j["profile"] = profile_json(p);
  j["max_residual"] = fmt(max_resid);
  j["max_oracle_gap"] = fmt(max_gap);
  j["tolerance_residual"] = fmt(tol_residual);
  j["tolerance_oracle"] = fmt(tol_oracle);
  j["symbolic_identity_zero"] = sfk::sfk_residual_symbolic(p).is_zero();
  report.write_json("report.json", j);

  if (max_resid > tol_residual)
    report.fail("sfk-residual", "max |Scal| = " + fmt(max_resid) + " > " + fmt(tol_residual));
  if (max_gap > tol_oracle)
    report.fail("oracle-agreement", "max gap = " + fmt(max_gap) + " > " + fmt(tol_oracle));
  return report.finish();
}

int run_asymptotics(const sfk::MomentumProfile& p, const std::string& end, double window_lo,
                    double window_hi, Report& report) {
  const int n = p.base_dim + 1;
  ordered_json out = ordered_json::array();
  try {
    if (end == "ae" || end == "both") {
      double lo = window_lo, hi = window_hi;
      if (lo <= 0.0) {  // per-dimension default windows
        lo = (n >= 4) ? 32.0 : 16.0;
        hi = (n >= 4) ? 1024.0 : 16384.0;
      }
      auto fit = sfk::fit_ae_remainder(p, {lo, hi});
      const double expected = (n == 2) ? -2.0 : 4.0 - 2.0 * n;
      ordered_json j;
      j["n"] = n;
      j["k"] = p.bundle_k;
      j["end"] = "ae";
      j["exponent"] = fmt(fit.exponent);
      j["coefficient"] = fmt(fit.coefficient);
      j["r2"] = fmt(fit.r_squared);
      j["window"] = {fmt(fit.window.first), fmt(fit.window.second)};
      j["expected_exponent"] = fmt(expected);
      out.push_back(j);
      if (std::abs(fit.exponent - expected) > 0.05)
        report.fail("ae-exponent", "fitted " + fmt(fit.exponent) + ", expected " + fmt(expected));
    }
    if (end == "cusp" || end == "both") {
      double lo = window_lo, hi = window_hi;
      if (lo <= 0.0 || hi > 1e-6) {
        lo = 1e-300;
        hi = 1e-65;
      }
      auto fit = sfk::fit_cusp_coefficient(p, {lo, hi});
      const double expected = (n == 2) ? 1.0 : 2.0 / (n * (n - 1.0));
      ordered_json j;
      j["n"] = n;
      j["k"] = p.bundle_k;
      j["end"] = "cusp";
      j["coefficient"] = fmt(fit.coefficient);
      j["offset_a"] = fmt(fit.offset_a);
      j["r2"] = fmt(fit.r_squared);
      j["window"] = {fmt(fit.window.first), fmt(fit.window.second)};
      j["expected_coefficient"] = fmt(expected);
      out.push_back(j);
      if (std::abs(fit.coefficient - expected) > 0.01 * std::max(1.0, expected))
        report.fail("cusp-coefficient",
                    "fitted " + fmt(fit.coefficient) + ", expected " + fmt(expected));
    }
  } catch (const sfk::FitQualityError& e) {
    report.fail("fit-quality", e.what());
  }
  report.write_json("asymptotics.json", out);
  return report.finish();
}

int run_glue(int n, int k, const std::vector<double>& epsilons, double phi1_quartic,
             Report& report) {
  sfk::MomentumProfile model = make_profile(n, k, sfk::Rational(0));
  std::function<sfk::Jet<4>(const sfk::Jet<4>&)> phi1;
  if (phi1_quartic != 0.0)
    phi1 = [phi1_quartic](const sfk::Jet<4>& rho) { return phi1_quartic * (rho * rho); };

  auto sweep = sfk::deviation_sweep(epsilons, n, phi1, model, 0.0);

  std::string csv = "epsilon,r_eps,R_eps,min_margin,sup_deviation,sup_deviation_model_scale\n";
  ordered_json rows = ordered_json::array();
  for (const auto& row : sweep.rows) {
    auto sched = sfk::make_schedule(row.epsilon, n);
    csv += fmt(row.epsilon) + "," + fmt(sched.r_eps) + "," + fmt(sched.R_eps) + "," +
           fmt(row.positivity_margin) + "," + fmt(row.sup_physical) + "," +
           fmt(row.sup_model_scale) + "\n";
    ordered_json j;
    j["epsilon"] = fmt(row.epsilon);
    j["n"] = n;
    j["k"] = k;
    j["min_margin"] = fmt(row.positivity_margin);
    j["sup_deviation"] = fmt(row.sup_physical);
    j["sup_deviation_model_scale"] = fmt(row.sup_model_scale);
    rows.push_back(j);

    if (!(row.positivity_margin > 0.0))
      report.fail("glue-positivity", "margin " + fmt(row.positivity_margin) + " at epsilon " +
                                         fmt(row.epsilon));
  }
  // region purity, spot-checked bit-exactly at representative radii
  for (double eps : epsilons) {
    sfk::GluedPotential g(sfk::make_schedule(eps, n), phi1, model);
    const auto& s = g.schedule();
    for (double z : {2.5 * s.r_eps, 0.7 * s.r_eps}) {
      const double assembled = g.assembled(z);
      const double pure = z >= 2.0 * s.r_eps ? g.outer_piece(z) : g.inner_piece(z);
      if (assembled != pure) {
        report.fail("glue-purity", "assembled and pure pieces differ at |z| = " + fmt(z) +
                                       ", epsilon " + fmt(eps));
      }
    }
  }
  for (std::size_t i = 1; i < sweep.rows.size(); ++i) {
    if (!(sweep.rows[i].sup_model_scale < sweep.rows[i - 1].sup_model_scale))
      report.fail("glue-deviation-decrease",
                  "model-scale deviation did not decrease from epsilon " +
                      fmt(sweep.rows[i - 1].epsilon) + " to " + fmt(sweep.rows[i].epsilon));
  }
  ordered_json j;
  j["rows"] = rows;
  j["model_scale_decay_exponent"] = fmt(sweep.fitted_decay_exponent);
  report.write_json("glue.json", j);
  report.write_text("glue_sweep.csv", csv);
  return report.finish();
}

int run_indicial(int n, int j_max, double eta, double delta, Report& report) {
  auto spec = sfk::cp_spectrum(n, j_max);
  std::string csv = "level,lambda_E,mu_E,root_re_1,root_im_1,root_re_2,root_im_2,root_re_3,root_im_3,root_re_4,root_im_4,kappa_running\n";
  double running = std::numeric_limits<double>::infinity();
  for (const auto& entry : spec.entries) {
    auto prob = sfk::IndicialProblem::from_base_eigenvalue(entry.eigenvalue.get_d());
    auto roots = sfk::indicial_roots(prob);
    running = std::min(running, roots.kappa);
    csv += std::to_string(entry.level) + "," + fmt(prob.lambda_E) + "," + fmt(prob.mu_E);
    for (const auto& s : roots.roots) csv += "," + fmt(s.real()) + "," + fmt(s.imag());
    csv += "," + fmt(running) + "\n";

    // cross-check against the companion-matrix route
    auto companion = sfk::indicial_roots_companion(prob);
    for (const auto& s : roots.roots) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& c : companion) best = std::min(best, std::abs(c - s));
      if (best > 1e-10)
        report.fail("indicial-root-pairing",
                    "factorization and companion roots differ by " + fmt(best));
    }
  }
  report.write_text("indicial.csv", csv);

  auto idx = sfk::fredholm_index(n, eta, delta);
  ordered_json j;
  j["n"] = n;
  j["eta"] = fmt(eta);
  j["delta"] = fmt(delta);
  j["kappa"] = fmt(running);
  j["ae_local_index"] = idx.ae_local_index;
  j["cusp_local_index"] = idx.cusp_local_index;
  j["index"] = idx.index;
  j["cross_term_sign_convention"] = "+lambda sigma (kernel-calibrated)";
  report.write_json("indicial.json", j);

  if (idx.index != 1 - (n * n - 1))
    report.fail("fredholm-index", "index " + std::to_string(idx.index) + " != " +
                                      std::to_string(1 - (n * n - 1)));
  return report.finish();
}

int run_spectrum(int n, int j_max, Report& report) {
  auto spec = sfk::cp_spectrum(n, j_max);
  std::string csv = "level,eigenvalue,multiplicity\n";
  for (const auto& e : spec.entries)
    csv += std::to_string(e.level) + "," + sfk::to_string(e.eigenvalue) + "," +
           std::to_string(e.multiplicity) + "\n";
  report.write_text("spectrum.csv", csv);

  auto ker = sfk::ker_lichnerowicz_E(n);
  ordered_json j;
  j["n"] = n;
  j["first_eigenvalue"] = sfk::to_string(spec.entries[1].eigenvalue);
  j["first_multiplicity"] = spec.entries[1].multiplicity;
  j["kernel_dim_nonconstant"] = ker.dim_nonconstant;
  j["kernel_dim_with_constants"] = ker.dim_with_constants;
  report.write_json("spectrum.json", j);

  if (spec.entries[1].multiplicity != static_cast<long>(n) * n - 1)
    report.fail("spectrum-multiplicity", "first eigenspace has multiplicity " +
                                             std::to_string(spec.entries[1].multiplicity));
  if (sfk::lichnerowicz_base_eigenvalue(spec.entries[1].eigenvalue) != sfk::Rational(0))
    report.fail("kernel-calibration", "first eigenvalue misses the kernel identity");
  return report.finish();
}

int run_topology(int n, const std::string& eps, const std::string& c1, const std::string& vol,
                 Report& report) {
  sfk::KahlerClassData d;
  d.n = n;
  d.epsilon = sfk::parse_rational(eps);
  d.c1_dot = sfk::parse_rational(c1);
  d.vol = sfk::parse_rational(vol);

  ordered_json j;
  j["n"] = n;
  j["epsilon"] = sfk::to_string(d.epsilon);
  try {
    const sfk::Rational s_sol = sfk::avg_scalar_solution(d);
    const sfk::Rational s_div = sfk::avg_scalar_divisor(n, d.epsilon);
    j["s_sol"] = sfk::to_string(s_sol);
    j["s_divisor"] = sfk::to_string(s_div);
    j["a"] = sfk::to_string(sfk::cusp_coefficient_a(s_div, s_sol));
  } catch (const std::domain_error& e) {
    report.fail("topology-domain", e.what());
    report.write_json("topology.json", j);
    return report.finish();
  }
  report.write_json("topology.json", j);
  std::cout << "s_sol = " << j["s_sol"].get<std::string>() << "\n";
  return report.finish();
}

int run_biharmonic(int n, const std::string& side, const std::string& modes_arg, Report& report) {
  std::vector<sfk::HarmonicMode> modes;
  std::istringstream in(modes_arg);
  std::string item;
  while (std::getline(in, item, ',')) {
    sfk::HarmonicMode m;
    if (std::sscanf(item.c_str(), "%d:%lf:%lf", &m.degree, &m.h, &m.k) != 3)
      throw CLI::ValidationError("--modes", "expected d:h:k entries, got '" + item + "'");
    if (m.degree > sfk::kDefaultHarmonicTruncation)
      throw CLI::ValidationError("--modes", "degree beyond the truncation limit");
    modes.push_back(m);
  }
  if (modes.empty()) throw CLI::ValidationError("--modes", "no modes given");

  std::vector<sfk::RadialBiharmonicSolution> sols;
  try {
    sols = side == "interior" ? sfk::biharmonic_interior(modes, n)
                              : sfk::biharmonic_exterior(modes, n);
  } catch (const std::invalid_argument& e) {
    report.fail("biharmonic-precondition", e.what());
    return report.finish();
  }

  const int N = 2 * n;
  std::string csv = "degree,c1,p1,c2,p2,boundary_h_error,boundary_k_error\n";
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const double h_err = std::abs(sols[i].eval(1.0) - modes[i].h);
    const double k_err = std::abs(sols[i].laplacian(1.0, N) - modes[i].k);
    csv += std::to_string(sols[i].degree) + "," + fmt(sols[i].c1) + "," +
           std::to_string(sols[i].p1) + "," + fmt(sols[i].c2) + "," + std::to_string(sols[i].p2) +
           "," + fmt(h_err) + "," + fmt(k_err) + "\n";
    if (h_err > 1e-10 || k_err > 1e-10)
      report.fail("biharmonic-boundary", "mode degree " + std::to_string(sols[i].degree));
    const long once1 = sfk::biharmonic_laplacian_coefficient(sols[i].p1, sols[i].degree, N);
    const long twice1 = sfk::biharmonic_laplacian_coefficient(sols[i].p1 - 2, sols[i].degree, N);
    const long once2 = sfk::biharmonic_laplacian_coefficient(sols[i].p2, sols[i].degree, N);
    const long twice2 = sfk::biharmonic_laplacian_coefficient(sols[i].p2 - 2, sols[i].degree, N);
    if (once1 * twice1 != 0 || once2 * twice2 != 0)
      report.fail("biharmonic-identity", "mode degree " + std::to_string(sols[i].degree));
  }
  report.write_text("biharmonic.csv", csv);
  return report.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scalar-flat Kahler momentum construction toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // --out/--seed/--config may follow the subcommand

  std::string out_dir = ".";
  std::string config_path;
  long seed = 20240817;
  app.add_option("--out", out_dir, "output directory for reports")->capture_default_str();
  app.add_option("--config", config_path, "JSON config; flags override its parameters");
  app.add_option("--seed", seed, "seed for randomized spot checks")->capture_default_str();

  int n = 2, k = 1, grid_points = 200, oracle_points = 25, j_max = 6;
  std::string beta = "0";
  double grid_min = 1e-2, grid_max = 1e2;
  double tol_residual = 1e-12, tol_oracle = 1e-6;
  double perturb_cubic = 0.0;
  std::string end = "both";
  double window_lo = 0.0, window_hi = 0.0;
  std::vector<double> epsilons{0.05, 0.02, 0.01};
  double phi1_quartic = 0.0;
  double eta = 0.5, delta = 0.5;
  std::string eps_rational = "1/10", c1 = "0", vol = "1";
  std::string side = "interior", modes = "0:1:0";

  auto add_profile_opts = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "complex dimension")->check(CLI::Range(2, 8));
    cmd->add_option("--k", k, "bundle twist")->check(CLI::Range(1, 16));
    cmd->add_option("--beta", beta, "cone parameter in [0,1] (n = 2 family)");
  };

  CLI::App* profile_cmd = app.add_subcommand("profile", "emit profile data and grid");
  add_profile_opts(profile_cmd);
  profile_cmd->add_option("--grid-min", grid_min);
  profile_cmd->add_option("--grid-max", grid_max);
  profile_cmd->add_option("--grid-points", grid_points);

  CLI::App* sfk_cmd = app.add_subcommand("check-sfk", "scalar-flatness residuals, two paths");
  add_profile_opts(sfk_cmd);
  sfk_cmd->add_option("--grid-min", grid_min);
  sfk_cmd->add_option("--grid-max", grid_max);
  sfk_cmd->add_option("--grid-points", grid_points);
  sfk_cmd->add_option("--oracle-points", oracle_points);
  sfk_cmd->add_option("--tol-residual", tol_residual);
  sfk_cmd->add_option("--tol-oracle", tol_oracle);
  sfk_cmd->add_option("--perturb-cubic", perturb_cubic, "add c tau^3 to phi (negative control)");

  CLI::App* asym_cmd = app.add_subcommand("asymptotics", "AE and cusp expansion fits");
  add_profile_opts(asym_cmd);
  asym_cmd->add_option("--end", end)->check(CLI::IsMember({"ae", "cusp", "both"}));
  asym_cmd->add_option("--window-lo", window_lo);
  asym_cmd->add_option("--window-hi", window_hi);

  CLI::App* glue_cmd = app.add_subcommand("glue", "assemble the approximate metric and sweep");
  glue_cmd->add_option("--n", n)->check(CLI::Range(2, 8));
  glue_cmd->add_option("--k", k)->check(CLI::Range(1, 16));
  glue_cmd->add_option("--epsilon", epsilons, "epsilon sweep values");
  glue_cmd->add_option("--phi1-quartic", phi1_quartic, "base correction coefficient of rho^2");

  CLI::App* ind_cmd = app.add_subcommand("indicial", "model operator roots and Fredholm index");
  ind_cmd->add_option("--n", n)->check(CLI::Range(2, 8));
  ind_cmd->add_option("--jmax", j_max)->check(CLI::Range(2, 40));
  ind_cmd->add_option("--eta", eta);
  ind_cmd->add_option("--delta", delta);

  CLI::App* spec_cmd = app.add_subcommand("spectrum", "base Laplacian spectrum on CP^(n-1)");
  spec_cmd->add_option("--n", n)->check(CLI::Range(2, 8));
  spec_cmd->add_option("--jmax", j_max)->check(CLI::Range(1, 40));

  CLI::App* topo_cmd = app.add_subcommand("topology", "exact intersection formulas");
  topo_cmd->add_option("--n", n)->check(CLI::Range(2, 8));
  topo_cmd->add_option("--epsilon", eps_rational, "exact rational, e.g. 1/10");
  topo_cmd->add_option("--c1", c1, "c1(X) . [omega]^(n-1), exact rational");
  topo_cmd->add_option("--vol", vol, "[omega]^n, exact rational");

  CLI::App* bih_cmd = app.add_subcommand("biharmonic", "boundary extensions per harmonic mode");
  bih_cmd->add_option("--n", n)->check(CLI::Range(2, 8));
  bih_cmd->add_option("--side", side)->check(CLI::IsMember({"interior", "exterior"}));
  bih_cmd->add_option("--modes", modes, "comma list of degree:h:k");

  // a JSON config {command, parameters, seed} supplies arguments; flags given
  // on the command line override its parameters
  std::vector<std::string> args;
  try {
    std::vector<std::string> given(argv + 1, argv + argc);
    std::string cfg_file;
    for (std::size_t i = 0; i < given.size(); ++i) {
      if (given[i] == "--config" && i + 1 < given.size()) cfg_file = given[i + 1];
      if (given[i].rfind("--config=", 0) == 0) cfg_file = given[i].substr(9);
    }
    if (cfg_file.empty()) {
      args = given;
    } else {
      std::ifstream in(cfg_file);
      if (!in) {
        std::cerr << "usage error: cannot open config " << cfg_file << "\n";
        return 2;
      }
      ordered_json cfg = ordered_json::parse(in, nullptr, true, true);
      const bool has_subcommand =
          !given.empty() && given.front()[0] != '-' &&
          app.get_subcommand_no_throw(given.front()) != nullptr;
      if (has_subcommand) {
        args.push_back(given.front());
        given.erase(given.begin());
      } else if (cfg.contains("command")) {
        args.push_back(cfg["command"].get<std::string>());
      } else {
        std::cerr << "usage error: config carries no command and none was given\n";
        return 2;
      }
      auto already_given = [&](const std::string& flag) {
        for (const auto& a : given)
          if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
        return false;
      };
      const ordered_json params = cfg.value("parameters", ordered_json::object());
      for (const auto& [key, value] : params.items()) {
        const std::string flag = "--" + key;
        if (already_given(flag)) continue;
        if (value.is_array()) {
          args.push_back(flag);
          for (const auto& v : value)
            args.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        } else {
          args.push_back(flag);
          args.push_back(value.is_string() ? value.get<std::string>() : value.dump());
        }
      }
      if (cfg.contains("seed") && !already_given("--seed")) {
        args.push_back("--seed");
        args.push_back(std::to_string(cfg["seed"].get<long>()));
      }
      args.insert(args.end(), given.begin(), given.end());
    }
  } catch (const ordered_json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion")
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (grid_points < 2) throw CLI::ValidationError("--grid-points", "grid must be non-empty");
    if (oracle_points < 1) throw CLI::ValidationError("--oracle-points", "need at least 1 point");
    if (!(tol_residual > 0.0) || !(tol_oracle > 0.0))
      throw CLI::ValidationError("--tol-residual", "tolerances must be positive");
    if (epsilons.empty()) throw CLI::ValidationError("--epsilon", "sweep must be non-empty");

    Report report{fs::path(out_dir)};
    if (profile_cmd->parsed()) {
      return run_profile(make_profile(n, k, sfk::parse_rational(beta)), grid_min, grid_max,
                         grid_points, report);
    }
    if (sfk_cmd->parsed()) {
      sfk::MomentumProfile p = make_profile(n, k, sfk::parse_rational(beta));
      if (perturb_cubic != 0.0) {
        sfk::Poly cubic({sfk::Rational(0), sfk::Rational(0), sfk::Rational(0),
                         sfk::Rational(perturb_cubic)});
        p = sfk::with_profile(p, p.phi + sfk::RatFun(cubic));
      }
      return run_check_sfk(p, grid_min, grid_max, grid_points, tol_residual, tol_oracle,
                           oracle_points, seed, report);
    }
    if (asym_cmd->parsed())
      return run_asymptotics(make_profile(n, k, sfk::parse_rational(beta)), end, window_lo,
                             window_hi, report);
    if (glue_cmd->parsed()) return run_glue(n, k, epsilons, phi1_quartic, report);
    if (ind_cmd->parsed()) return run_indicial(n, j_max, eta, delta, report);
    if (spec_cmd->parsed()) return run_spectrum(n, j_max, report);
    if (topo_cmd->parsed()) return run_topology(n, eps_rational, c1, vol, report);
    if (bih_cmd->parsed()) return run_biharmonic(n, side, modes, report);
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ordered_json::parse_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 1;
  }
}
