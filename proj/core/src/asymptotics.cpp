#include "sfk/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace sfk {
namespace {

constexpr double kAnchorTau = 50.0;  // where numeric constants meet exact tails

double tail_coefficient(const PrimitiveExpansion& e, int power) {
  auto it = e.powers.find(power);
  return it == e.powers.end() ? 0.0 : it->second.get_d();
}

Rational tail_coefficient_exact(const PrimitiveExpansion& e, int power) {
  auto it = e.powers.find(power);
  return it == e.powers.end() ? Rational(0) : it->second;
}

}  // namespace

AeExpansion::AeExpansion(const MomentumProfile& p, int terms) : profile_(p) {
  k_ = p.bundle_k;
  c_m_ = p.base_potential_coeff.get_d();

  const RatFun inv_phi = RatFun(Poly(Rational(1))) / p.phi;
  const RatFun tau_over_phi = RatFun(Poly::monomial(Rational(1), 1)) / p.phi;

  r_exp_ = inv_phi.primitive_expansion_at_infinity(terms);
  f_exp_ = tau_over_phi.primitive_expansion_at_infinity(terms);

  if (r_exp_.log_coeff != frac(k_, 2))
    throw std::logic_error("AE expansion: r(tau) does not grow like (k/2) log tau");

  // pin the integration constants against the quadrature path at a moderate
  // anchor where the exact tails are already converged to ~1e-20
  r_exp_.constant = radial_log_coordinate(p, kAnchorTau) -
                    (r_exp_.log_coeff.get_d() * std::log(kAnchorTau) + r_exp_.tail(kAnchorTau));
  f_exp_.constant = kahler_potential_f(p, kAnchorTau) -
                    (f_exp_.log_coeff.get_d() * std::log(kAnchorTau) + f_exp_.tail(kAnchorTau));

  a0_ = tail_coefficient_exact(f_exp_, 1);
  a1_ = f_exp_.log_coeff;
  if (a0_ <= 0) throw std::logic_error("AE expansion: f(tau) is not asymptotically linear");

  c_net_ = p.base_potential_coeff + 2 * a1_;
  const int n = p.base_dim + 1;
  if (n == 2) {
    if (c_net_ <= 0) throw std::logic_error("AE expansion: nonpositive net log coefficient");
    c_log_target_ = 1.0;  // the normalized potential carries 2 log|z| = log rho
    lambda_exact_ = Rational(1) / c_net_;
  } else {
    if (c_net_ != 0)
      throw std::logic_error("AE expansion: net log coefficient must vanish for n >= 3");
    c_log_target_ = 0.0;
    lambda_exact_ = Rational(1) / (2 * a0_);
  }
  lambda_ = lambda_exact_.get_d();
  two_lambda_a0_ = Rational(2 * lambda_exact_ * a0_).get_d();

  const double c_r = r_exp_.constant;
  const double s_c = std::exp((2.0 / k_) * c_r);
  s_ = s_c / two_lambda_a0_;
  g1_ = (2.0 / k_) * tail_coefficient(r_exp_, -1);

  c_inf_ = lambda_ * c_m_ * (2.0 / k_) * c_r + 2.0 * lambda_ * f_exp_.constant -
           c_log_target_ * std::log(two_lambda_a0_) - two_lambda_a0_ * g1_;
}

double AeExpansion::remainder_at_tau(double tau) const {
  // r's tail is all-decaying; f's tail also carries the linear a0 tau term,
  // which belongs to the leading rho' part, so only its decaying piece enters
  const double g = (2.0 / k_) * r_exp_.tail(tau);
  const double h = tau * std::expm1(g) - g1_;
  return -two_lambda_a0_ * h + (lambda_ * c_m_ - c_log_target_) * (2.0 / k_) * r_exp_.tail(tau) +
         2.0 * lambda_ * f_exp_.decaying_tail(tau);
}

double AeExpansion::tau_from_radius(double abs_z) const {
  const double rho = s_ * abs_z * abs_z;
  const double r_target = 0.5 * k_ * std::log(rho);
  return invert_radius(profile_, r_target);
}

double AeExpansion::remainder_at_radius(double abs_z) const {
  return remainder_at_tau(tau_from_radius(abs_z));
}

double AeExpansion::normalized_potential_direct(double rho_normalized) const {
  const double rho = s_ * rho_normalized;
  const double r_target = 0.5 * k_ * std::log(rho);
  const double tau = invert_radius(profile_, r_target);
  const double raw = c_m_ * (2.0 / k_) * radial_log_coordinate(profile_, tau) +
                     2.0 * kahler_potential_f(profile_, tau);
  return lambda_ * raw;
}

Rational AeExpansion::leading_tau_coefficient_exact() const {
  const Rational two_over_k = frac(2, k_);
  const Rational r1 = tail_coefficient_exact(r_exp_, -1);
  // r_exp_ stores primitives: coefficient of tau^-2 in the tail comes from
  // the integrated series; read it directly.
  const Rational r2 = tail_coefficient_exact(r_exp_, -2);
  const Rational f1 = tail_coefficient_exact(f_exp_, -1);
  const Rational c_t(n_is_two() ? 1 : 0);
  const Rational g1 = two_over_k * r1;
  const Rational h1 = two_over_k * r2 + g1 * g1 / 2;
  return -2 * lambda_exact_ * a0_ * h1 +
         (lambda_exact_ * profile_.base_potential_coeff - c_t) * two_over_k * r1 +
         2 * lambda_exact_ * f1;
}

PowerFit fit_power_remainder(const std::vector<std::pair<double, double>>& samples) {
  return loglog_power_fit(samples);
}

PowerFit fit_ae_remainder(const MomentumProfile& p, std::pair<double, double> radius_window) {
  auto [lo, hi] = radius_window;
  if (!(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("fit_ae_remainder: bad window");
  if (lo * lo < 1e2)
    throw std::invalid_argument("fit_ae_remainder: window must sit in the AE regime (rho >= 1e2)");

  AeExpansion exp(p);
  std::vector<std::pair<double, double>> samples;
  for (double z = lo; z <= hi * (1.0 + 1e-12); z *= 2.0)
    samples.emplace_back(z, exp.remainder_at_radius(z));
  if (samples.size() < 4)
    throw std::invalid_argument("fit_ae_remainder: window too narrow for a dyadic fit");

  PowerFit fit = fit_power_remainder(samples);
  if (fit.r_squared < 0.999) {
    std::ostringstream os;
    os << "AE remainder fit rejected: r^2 = " << fit.r_squared << " over [" << lo << ", " << hi
       << "], exponent " << fit.exponent;
    throw FitQualityError(os.str());
  }
  return fit;
}

double cusp_fiber_potential(const MomentumProfile& p, double z_h_sq) {
  if (!(z_h_sq > 0.0) || z_h_sq >= 1.0)
    throw std::domain_error("cusp_fiber_potential: need 0 < |z|^2 < 1");
  const double r = 0.5 * std::log(z_h_sq);
  const double tau = invert_radius(p, r);
  const double nu = (p.base_dim + 1 == 2) ? 1.0 : 2.0;
  return nu * kahler_potential_f(p, tau);
}

CuspCoefficientFit fit_cusp_model(const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 10) throw std::invalid_argument("fit_cusp_model: too few samples");

  auto fit_at = [&](double a, LinearFit* out) -> double {
    std::vector<std::vector<double>> basis;
    std::vector<double> rhs;
    basis.reserve(samples.size());
    for (const auto& [log_rho, value] : samples) {
      const double big_l = a - log_rho;
      if (big_l <= 1.0) return std::numeric_limits<double>::infinity();
      const double ll = std::log(big_l);
      basis.push_back({1.0, log_rho, ll, ll / big_l, 1.0 / big_l, (ll / big_l) * (ll / big_l),
                       ll / (big_l * big_l)});
      rhs.push_back(value);
    }
    LinearFit lin = linear_least_squares(basis, rhs);
    if (out) *out = lin;
    return lin.residual_norm;
  };

  double best_a = 0.0, best_res = std::numeric_limits<double>::infinity();
  for (double a = -4.0; a <= 4.0 + 1e-9; a += 0.25) {
    const double res = fit_at(a, nullptr);
    if (res < best_res) {
      best_res = res;
      best_a = a;
    }
  }
  double lo = best_a - 0.25, hi = best_a + 0.25;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int i = 0; i < 60; ++i) {
    const double c = hi - gr * (hi - lo);
    const double d = lo + gr * (hi - lo);
    if (fit_at(c, nullptr) < fit_at(d, nullptr))
      hi = d;
    else
      lo = c;
  }
  const double a_hat = 0.5 * (lo + hi);
  LinearFit lin;
  fit_at(a_hat, &lin);

  CuspCoefficientFit fit;
  fit.coefficient = -lin.coefficients[2];
  fit.offset_a = a_hat;
  fit.r_squared = lin.r_squared;
  return fit;
}

CuspCoefficientFit fit_cusp_coefficient(const MomentumProfile& p,
                                        std::pair<double, double> depth_window) {
  auto [lo, hi] = depth_window;
  if (!(lo > 0.0) || !(hi > lo) || hi > 1e-6)
    throw std::invalid_argument("fit_cusp_coefficient: window must lie deep in the cusp");

  const double llo = std::log(std::log(1.0 / lo));
  const double lhi = std::log(std::log(1.0 / hi));
  const int count = 120;
  std::vector<std::pair<double, double>> samples;
  samples.reserve(count);
  for (int i = 0; i < count; ++i) {
    // uniform in log of the depth variable -log rho
    const double ll = llo + (lhi - llo) * i / (count - 1);
    const double log_rho = -std::exp(ll);
    samples.emplace_back(log_rho, cusp_fiber_potential(p, std::exp(log_rho)));
  }
  CuspCoefficientFit fit = fit_cusp_model(samples);
  fit.window = depth_window;
  if (fit.r_squared < 0.999) {
    std::ostringstream os;
    os << "cusp coefficient fit rejected: r^2 = " << fit.r_squared << " over [" << lo << ", "
       << hi << "]";
    throw FitQualityError(os.str());
  }
  return fit;
}

}  // namespace sfk
