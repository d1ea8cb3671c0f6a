#include "sfk/gluing.hpp"

#include <cmath>
#include <sstream>

#include "sfk/fit.hpp"

namespace sfk {

GluingSchedule make_schedule(double epsilon, int n) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw std::domain_error("make_schedule: epsilon must lie in (0, 1)");
  if (n < 2) throw std::invalid_argument("make_schedule: n must be >= 2");
  GluingSchedule s;
  s.epsilon = epsilon;
  s.n = n;
  s.r_eps = std::pow(epsilon, (2.0 * n - 1.0) / (2.0 * n + 1.0));
  s.R_eps = s.r_eps / epsilon;
  return s;
}

double CutoffSpec::derivative_bound(int order) const {
  if (order < 0 || order > 4)
    throw std::invalid_argument("CutoffSpec::derivative_bound: order must be in [0, 4]");
  double sup = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double x = lo + (hi - lo) * i / 400.0;
    Jet<4> j = eval(Jet<4>::variable(x));
    sup = std::max(sup, std::abs(j.derivative(order)));
  }
  return sup;
}

GluedPotential::GluedPotential(GluingSchedule sched, std::function<Jet<4>(const Jet<4>&)> base_phi1,
                               const MomentumProfile& model)
    : sched_(sched), phi1_(std::move(base_phi1)) {
  if (model.base_dim + 1 != sched.n)
    throw std::invalid_argument("glued potential: model dimension does not match the schedule");
  model_ = std::make_shared<AeExpansion>(model);
  RadialKahlerPotential raw = potential_from_profile(model);
  model_analytic_raw_ = raw.analytic;
  model_log_coeff_raw_ = raw.log_coeff;
  if (!phi1_) phi1_ = [](const Jet<4>&) { return Jet<4>(0.0); };
}

Jet<4> GluedPotential::model_term_jet(const Jet<4>& rho_w) const {
  // phi2 = P_norm - rho_w - c_t log rho_w - C on the normalized model, so the
  // model term c_t log rho_w + phi2 equals P_norm - rho_w - C.
  const double lambda = model_->potential_scale();
  const double s = model_->coordinate_scale();
  const Jet<4> rho_raw = s * rho_w;
  Jet<4> p_norm = lambda * (model_analytic_raw_(rho_raw) + model_log_coeff_raw_ * log(rho_raw));
  return p_norm - rho_w - model_->constant();
}

double GluedPotential::outer_piece(double abs_z) const {
  const double rho = abs_z * abs_z;
  return rho + phi1_(Jet<4>(rho)).value();
}

double GluedPotential::inner_piece(double abs_z) const {
  const double rho = abs_z * abs_z;
  const double e2 = sched_.epsilon * sched_.epsilon;
  return rho + e2 * model_term_jet(Jet<4>(rho / e2)).value();
}

double GluedPotential::assembled(double abs_z) const {
  return assembled_jet(Jet<4>(abs_z * abs_z)).value();
}

Jet<4> GluedPotential::assembled_jet(const Jet<4>& rho) const {
  const double abs_z = std::sqrt(rho.value());
  const double e2 = sched_.epsilon * sched_.epsilon;
  if (abs_z >= 2.0 * sched_.r_eps) return rho + phi1_(rho);
  if (abs_z <= sched_.r_eps) return rho + e2 * model_term_jet(rho / e2);
  const Jet<4> x = sqrt(rho) / sched_.r_eps;
  const Jet<4> g1 = cutoff_.eval(x);
  const Jet<4> g2 = 1.0 - g1;
  return rho + g1 * phi1_(rho) + e2 * (g2 * model_term_jet(rho / e2));
}

double GluedPotential::correction(double abs_z) const {
  const double rho = abs_z * abs_z;
  return assembled_jet(Jet<4>(rho)).value() - rho;
}

RadialKahlerPotential GluedPotential::as_radial_potential() const {
  RadialKahlerPotential pot;
  pot.n = sched_.n;
  pot.log_coeff = 0.0;
  GluedPotential copy = *this;
  pot.analytic = [copy](const Jet<4>& rho) { return copy.assembled_jet(rho); };
  return pot;
}

GluedPotential assemble_glued_potential(const GluingSchedule& sched,
                                        std::function<Jet<4>(const Jet<4>&)> base_phi1,
                                        const MomentumProfile& model) {
  return GluedPotential(sched, std::move(base_phi1), model);
}

namespace {

std::vector<double> annulus_grid(const GluingSchedule& s, int grid_points) {
  std::vector<double> zs(grid_points);
  for (int i = 0; i < grid_points; ++i)
    zs[i] = s.r_eps * std::pow(2.0, static_cast<double>(i) / (grid_points - 1));
  return zs;
}

}  // namespace

GlueDeviation glued_scalar_deviation(const GluedPotential& g, double s_base, int grid_points) {
  RadialKahlerPotential pot = g.as_radial_potential();
  double sup = 0.0;
  for (double z : annulus_grid(g.schedule(), grid_points)) {
    CurvatureReport rep = scalar_curvature_radial(pot, z * z);
    sup = std::max(sup, std::abs(rep.scalar - s_base));
  }
  GlueDeviation dev;
  dev.sup_physical = sup;
  dev.sup_model_scale = g.schedule().epsilon * g.schedule().epsilon * sup;
  return dev;
}

DeviationSweep deviation_sweep(const std::vector<double>& epsilons, int n,
                               std::function<Jet<4>(const Jet<4>&)> base_phi1,
                               const MomentumProfile& model, double s_base) {
  if (epsilons.empty()) throw std::invalid_argument("deviation_sweep: empty epsilon list");
  DeviationSweep sweep;
  std::vector<std::pair<double, double>> pts;
  for (double eps : epsilons) {
    GluedPotential g = assemble_glued_potential(make_schedule(eps, n), base_phi1, model);
    DeviationSweepRow row;
    row.epsilon = eps;
    GlueDeviation dev = glued_scalar_deviation(g, s_base);
    row.sup_physical = dev.sup_physical;
    row.sup_model_scale = dev.sup_model_scale;
    row.positivity_margin = glued_positivity_margin(g);
    sweep.rows.push_back(row);
    if (row.sup_model_scale > 0.0) pts.emplace_back(eps, row.sup_model_scale);
  }
  if (pts.size() >= 3) {
    std::vector<std::vector<double>> basis;
    std::vector<double> rhs;
    for (auto& [e, d] : pts) {
      basis.push_back({std::log(e), 1.0});
      rhs.push_back(std::log(d));
    }
    sweep.fitted_decay_exponent = linear_least_squares(basis, rhs).coefficients[0];
  }
  return sweep;
}

double glued_positivity_margin(const GluedPotential& g, int grid_points) {
  RadialKahlerPotential pot = g.as_radial_potential();
  std::vector<double> rhos;
  for (double z : annulus_grid(g.schedule(), grid_points)) rhos.push_back(z * z);
  return positivity_scan(pot, rhos);
}

double annulus_correction_constant(const GluedPotential& g, int grid_points) {
  double sup = 0.0;
  for (double z : annulus_grid(g.schedule(), grid_points))
    sup = std::max(sup, std::abs(g.correction(z)) / (z * z * z * z));
  return sup;
}

long biharmonic_laplacian_coefficient(long power, long degree, long real_dim) {
  return power * (power + real_dim - 2) - degree * (degree + real_dim - 2);
}

double RadialBiharmonicSolution::eval(double r) const {
  return c1 * std::pow(r, p1) + c2 * std::pow(r, p2);
}

double RadialBiharmonicSolution::laplacian(double r, int real_dim) const {
  const double l1 = static_cast<double>(biharmonic_laplacian_coefficient(p1, degree, real_dim));
  const double l2 = static_cast<double>(biharmonic_laplacian_coefficient(p2, degree, real_dim));
  return c1 * l1 * std::pow(r, p1 - 2) + c2 * l2 * std::pow(r, p2 - 2);
}

std::vector<RadialBiharmonicSolution> biharmonic_interior(const std::vector<HarmonicMode>& modes,
                                                          int n) {
  if (n < 2) throw std::invalid_argument("biharmonic_interior: n must be >= 2");
  const int N = 2 * n;
  std::vector<RadialBiharmonicSolution> out;
  out.reserve(modes.size());
  for (const auto& m : modes) {
    if (m.degree < 0) throw std::invalid_argument("biharmonic_interior: negative degree");
    RadialBiharmonicSolution sol;
    sol.degree = m.degree;
    sol.p1 = m.degree;
    sol.p2 = m.degree + 2;
    // Lap(r^(d+2) Y_d) = (4d + 2N) r^d Y_d
    sol.c2 = m.k / static_cast<double>(4 * m.degree + 2 * N);
    sol.c1 = m.h - sol.c2;
    out.push_back(sol);
  }
  return out;
}

std::vector<RadialBiharmonicSolution> biharmonic_exterior(const std::vector<HarmonicMode>& modes,
                                                          int n) {
  if (n < 2) throw std::invalid_argument("biharmonic_exterior: n must be >= 2");
  const int N = 2 * n;
  for (const auto& m : modes) {
    if (m.degree == 0 && m.k != 0.0)
      throw std::invalid_argument(
          "biharmonic_exterior: k must have zero mean on the boundary sphere");
  }
  std::vector<RadialBiharmonicSolution> out;
  out.reserve(modes.size());
  for (const auto& m : modes) {
    if (m.degree < 0) throw std::invalid_argument("biharmonic_exterior: negative degree");
    RadialBiharmonicSolution sol;
    sol.degree = m.degree;
    sol.p1 = 2 - N - m.degree;
    sol.p2 = 4 - N - m.degree;
    const long denom = biharmonic_laplacian_coefficient(sol.p2, m.degree, N);
    if (denom == 0) {
      // n = 2, degree 0: both candidates are harmonic; k = 0 was enforced and
      // the constant component is dropped in favor of the decaying r^-2.
      sol.c1 = m.h;
      sol.c2 = 0.0;
    } else {
      sol.c2 = m.k / static_cast<double>(denom);
      sol.c1 = m.h - sol.c2;
    }
    out.push_back(sol);
  }
  return out;
}

}  // namespace sfk
