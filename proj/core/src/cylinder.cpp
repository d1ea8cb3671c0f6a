#include "sfk/cylinder.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sfk/fit.hpp"

namespace sfk {

IndicialProblem IndicialProblem::from_base_eigenvalue(double lambda) {
  return {lambda, 0.5 * lambda * lambda - lambda};
}

std::complex<double> model_operator_symbol(const IndicialProblem& prob, std::complex<double> s) {
  const std::complex<double> sigma = s * s - s;
  return 0.5 * sigma * sigma + (prob.lambda_E - 0.5) * sigma + prob.mu_E;
}

IndicialSpectrum indicial_roots(const IndicialProblem& prob) {
  // sigma^2/2 + (lambda - 1/2) sigma + mu = 0, then s^2 - s = sigma
  const std::complex<double> b(prob.lambda_E - 0.5, 0.0);
  const std::complex<double> disc = b * b - 2.0 * prob.mu_E;
  const std::complex<double> root_disc = std::sqrt(disc);
  const std::complex<double> sigmas[2] = {-b + root_disc, -b - root_disc};

  IndicialSpectrum spec;
  for (const auto& sigma : sigmas) {
    const std::complex<double> d = std::sqrt(1.0 + 4.0 * sigma);
    spec.roots.push_back(0.5 * (1.0 + d));
    spec.roots.push_back(0.5 * (1.0 - d));
  }
  spec.kappa = std::numeric_limits<double>::infinity();
  for (const auto& s : spec.roots) {
    if (std::abs(s.imag()) < 1e-12 && s.real() > 1e-12)
      spec.kappa = std::min(spec.kappa, s.real());
  }
  return spec;
}

std::vector<std::complex<double>> indicial_roots_companion(const IndicialProblem& prob) {
  // expand p(s) = sigma^2/2 + (lambda-1/2) sigma + mu with sigma = s^2 - s:
  //   s^4/2 - s^3 + (1/2 + c) s^2 - c s + mu,  c = lambda - 1/2
  const double c = prob.lambda_E - 0.5;
  // monic: s^4 - 2 s^3 + (1 + 2c) s^2 - 2c s + 2 mu
  const double a3 = -2.0, a2 = 1.0 + 2.0 * c, a1 = -2.0 * c, a0 = 2.0 * prob.mu_E;
  Eigen::Matrix4d companion = Eigen::Matrix4d::Zero();
  companion(0, 3) = -a0;
  companion(1, 3) = -a1;
  companion(2, 3) = -a2;
  companion(3, 3) = -a3;
  companion(1, 0) = companion(2, 1) = companion(3, 2) = 1.0;
  Eigen::EigenSolver<Eigen::Matrix4d> solver(companion);
  std::vector<std::complex<double>> roots;
  for (int i = 0; i < 4; ++i) roots.push_back(solver.eigenvalues()(i));
  return roots;
}

double smallest_positive_root(int n, int j_max, bool* monotone_flag) {
  if (j_max < 2) throw std::invalid_argument("smallest_positive_root: j_max must be >= 2");
  BaseSpectrum spec = cp_spectrum(n, j_max);
  double running = std::numeric_limits<double>::infinity();
  bool monotone = true;
  for (const auto& entry : spec.entries) {
    IndicialSpectrum is = indicial_roots(IndicialProblem::from_base_eigenvalue(
        entry.eigenvalue.get_d()));
    const double before = running;
    running = std::min(running, is.kappa);
    if (running < before && std::isfinite(before) && entry.level > 1) {
      // higher modes should not lower the minimum; flag if they do
      monotone = false;
    }
  }
  if (monotone_flag) *monotone_flag = monotone;
  return running;
}

FredholmIndexReport fredholm_index(int n, double eta, double delta) {
  if (n < 2) throw std::invalid_argument("fredholm_index: n must be >= 2");
  const double kappa = smallest_positive_root(n, 6);
  if (!(eta > 0.0) || !(eta < kappa)) {
    std::ostringstream os;
    os << "fredholm_index: eta = " << eta << " outside the legal window (0, " << kappa << ")";
    throw WeightOnWallError(os.str());
  }
  if (!(delta > 0.0) || !(delta < 1.0)) {
    std::ostringstream os;
    os << "fredholm_index: delta = " << delta << " outside (0, 1) crosses an indicial wall";
    throw WeightOnWallError(os.str());
  }
  FredholmIndexReport rep;
  rep.ae_local_index = 1;
  // the cusp end contributes minus the multiplicity of the calibrated kernel
  // eigenspace on the base
  rep.cusp_local_index = -static_cast<int>(cp_spectrum(n, 1).entries[1].multiplicity);
  rep.index = rep.ae_local_index + rep.cusp_local_index;
  return rep;
}

DecayFit model_vs_full_decay(const MomentumProfile& p, const std::vector<double>& t_grid,
                             double lambda) {
  if (t_grid.size() < 4)
    throw std::invalid_argument("model_vs_full_decay: need at least 4 grid points");
  const int n = p.base_dim + 1;
  const double model_fiber = 1.0 / (n * (n - 1));
  // the n = 2 family carries the section-2 normalization; rescaling by 1/2
  // brings it to the class the model statement is made in
  const double nu = (n == 2) ? 0.5 : 1.0;

  std::vector<std::pair<double, double>> fiber_gap, base_gap;
  const DRatFun phi = p.phi.to_double();
  for (double t : t_grid) {
    const double r = 0.5 * (lambda - std::exp(t));
    const double tau = invert_radius(p, r);
    // fiber coefficient of g_HS in (dr^2 + dtheta^2) is phi(tau); the model
    // coefficient is (1/(n(n-1))) (dt/dr)^-2... compare against
    // model_fiber * (dt/dr)^2 with dt/dr = -2/(lambda - 2r) = -2 e^{-t}... in
    // dr^2 terms: model = model_fiber * 4 / (lambda - 2r)^2.
    const double model_c = model_fiber * 4.0 / ((lambda - 2.0 * r) * (lambda - 2.0 * r));
    const double ratio_f = nu * phi.eval(tau) / model_c;
    fiber_gap.emplace_back(t, std::abs(ratio_f - 1.0));

    // base coefficient of g_HS relative to the model's p* g_FS term, scaled
    // to 1 at tau = 0
    double base_c;
    if (p.normalization == BaseNormalization::cp1_twisted)
      base_c = 1.0 + 0.5 * p.bundle_k * tau;  // nu (2 + k tau) g_FS against nu 2 g_FS
    else
      base_c = 1.0 + p.bundle_k * tau;  // (1 - beta tau) with beta = -k
    base_gap.emplace_back(t, std::abs(base_c - 1.0));
  }

  auto fit_rate = [](const std::vector<std::pair<double, double>>& gap) {
    std::vector<std::vector<double>> basis;
    std::vector<double> rhs;
    for (const auto& [t, g] : gap) {
      if (g <= 0.0) continue;
      basis.push_back({t, 1.0});
      rhs.push_back(std::log(g));
    }
    if (basis.size() < 3) return std::numeric_limits<double>::infinity();  // identically zero gap
    LinearFit lin = linear_least_squares(basis, rhs);
    return -lin.coefficients[0];
  };

  DecayFit fit;
  fit.fiber_rate = fit_rate(fiber_gap);
  fit.base_rate = fit_rate(base_gap);
  fit.rate = std::min(fit.fiber_rate, fit.base_rate);
  return fit;
}

}  // namespace sfk
