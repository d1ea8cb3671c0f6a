#include "sfk/curvature.hpp"

#include <cmath>
#include <sstream>

#include "sfk/quadrature.hpp"

namespace sfk {
namespace {

using J4 = Jet<4>;
using J2 = Jet<2>;

/// Taylor coefficients of the order-th u-derivative of a jet in u, as a
/// lower-order jet.
J2 derivative_jet(const J4& a, int order) {
  J2 r;
  for (std::size_t j = 0; j <= 2; ++j) {
    double c = a.c[j + order];
    for (int m = 1; m <= order; ++m) c *= static_cast<double>(j + m);
    r.c[j] = c;
  }
  return r;
}

/// The potential as a jet in u = log(rho/rho0) at u = 0. Working in the
/// log-radius variable keeps the fiber-direction metric coefficient
/// D^2 F = rho (F' + rho F'') a direct jet readout rather than a cancelling
/// sum, which matters deep in the cusp where it is orders of magnitude
/// smaller than rho F'.
J4 potential_log_jet(const RadialKahlerPotential& p, double rho) {
  const J4 u = J4::variable(0.0);
  J4 f = p.analytic(rho * exp(u));
  if (p.log_coeff != 0.0) f += p.log_coeff * (std::log(rho) + u);
  return f;
}

}  // namespace

CurvatureReport scalar_curvature_radial(const RadialKahlerPotential& p, double rho) {
  if (!(rho > 0.0)) throw std::domain_error("scalar_curvature_radial: rho must be positive");
  if (p.n < 2) throw std::invalid_argument("scalar_curvature_radial: n must be >= 2");

  J4 f = potential_log_jet(p, rho);
  const double a = f.c[1];  // D F = rho F' at rho
  if (!(a > 0.0)) {
    std::ostringstream os;
    os << "metric degenerates at rho = " << rho << ": rho F' = " << a;
    throw DegenerateMetricError(os.str());
  }
  f = f / a;  // normalize to D F(0) = 1

  const J2 df = derivative_jet(f, 1);   // D F-hat
  const J2 d2f = derivative_jet(f, 2);  // D^2 F-hat = (rho/a)(F' + rho F'')

  const double mixed_hat = d2f.value();
  if (!(mixed_hat > 0.0)) {
    std::ostringstream os;
    os << "metric degenerates at rho = " << rho
       << ": (F' + rho F'')/(F') = " << mixed_hat / df.value();
    throw DegenerateMetricError(os.str());
  }

  // log det g = (n-1) log(D F) + log(D^2 F) - n log(rho), and in the trace
  // formula S = -[(n-1) DL / DF + D^2 L / D^2 F]
  const J2 u2 = J2::variable(0.0);
  const J2 log_det =
      static_cast<double>(p.n - 1) * log(df) + log(d2f) - static_cast<double>(p.n) * u2;
  const double dl = log_det.derivative(1);
  const double d2l = log_det.derivative(2);

  const double ric_base_hat = -dl / df.value();
  const double ric_fiber_hat = -d2l / mixed_hat;
  const double s_hat = static_cast<double>(p.n - 1) * ric_base_hat + ric_fiber_hat;

  CurvatureReport rep;
  rep.rho = rho;
  rep.scalar = s_hat / a;
  rep.ricci_base = ric_base_hat / a;
  rep.ricci_fiber = ric_fiber_hat / a;
  rep.margin_first = a / rho;                 // F'
  rep.margin_mixed = (a / rho) * mixed_hat;   // F' + rho F''
  rep.log_det_g = p.n * std::log(a / rho) + std::log(mixed_hat);
  rep.det_g = std::exp(rep.log_det_g);
  return rep;
}

double positivity_scan(const RadialKahlerPotential& p, std::span<const double> rho_grid) {
  if (rho_grid.empty()) throw std::invalid_argument("positivity_scan: empty grid");
  double margin = std::numeric_limits<double>::infinity();
  for (double rho : rho_grid) {
    const J4 f = potential_log_jet(p, rho);
    const double fp = f.c[1] / rho;                    // F'
    const double mixed = 2.0 * f.c[2] / rho;           // F' + rho F''
    margin = std::min({margin, fp, mixed});
  }
  return margin;
}

RadialKahlerPotential potential_from_profile(const MomentumProfile& p) {
  RadialKahlerPotential pot;
  pot.n = p.base_dim + 1;
  pot.log_coeff = p.base_potential_coeff.get_d();
  const double k = p.bundle_k;
  const DRatFun phi = p.phi.to_double();
  const double f_offset = p.f_offset;
  // capture an owned copy of the profile for the inversions
  const MomentumProfile prof = p;

  pot.analytic = [prof, phi, k, f_offset](const J4& rho_jet) -> J4 {
    // r = (k/2) log rho; tau via Newton in jet space
    const J4 r_jet = (k / 2.0) * log(rho_jet);
    const double tau0 = invert_radius(prof, r_jet.value());
    const double r0 = radial_log_coordinate(prof, tau0);

    J4 tau(tau0);
    for (int sweep = 0; sweep < 5; ++sweep) {
      // jet of r(tau(sigma)) from r' = 1/phi: integrate (1/phi)(tau) * tau'
      J4 integrand = J4(1.0) / phi.eval_as(tau);
      J4 r_of_tau(r0);
      for (std::size_t j = 1; j <= 4; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < j; ++i)
          acc += integrand.c[i] * static_cast<double>(j - i) * tau.c[j - i];
        r_of_tau.c[j] = acc / static_cast<double>(j);
      }
      tau = tau - (r_of_tau - r_jet) * phi.eval_as(tau);
    }

    // f from f' = tau/phi with quadrature anchor at tau0
    const double f0 = kahler_potential_f(prof, tau0);
    J4 integrand = tau / phi.eval_as(tau);
    J4 f_jet(f0);
    for (std::size_t j = 1; j <= 4; ++j) {
      double acc = 0.0;
      for (std::size_t i = 0; i < j; ++i)
        acc += integrand.c[i] * static_cast<double>(j - i) * tau.c[j - i];
      f_jet.c[j] = acc / static_cast<double>(j);
    }
    return 2.0 * f_jet;
  };
  return pot;
}

}  // namespace sfk
