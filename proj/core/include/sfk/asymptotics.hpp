#pragma once

#include <utility>
#include <vector>

#include "sfk/fit.hpp"
#include "sfk/momentum.hpp"

namespace sfk {

/// Exact large-tau expansion of a profile's AE end. The covering potential
/// P(rho) = c_M log(rho) + 2 f(tau(rho)) is brought to the normal form
///
///   P_norm(rho') = rho' + c_log_target * log(rho') + constant + remainder,
///
/// by an affine rescaling rho = coordinate_scale * rho', P_norm =
/// potential_scale * P. The Laurent coefficients of the tails of r and f are
/// computed over the rationals, so the remainder can be evaluated far out
/// without catastrophic cancellation against the rho' term.
class AeExpansion {
 public:
  explicit AeExpansion(const MomentumProfile& p, int terms = 16);

  double c_log_target() const { return c_log_target_; }
  double potential_scale() const { return lambda_; }
  double coordinate_scale() const { return s_; }
  double constant() const { return c_inf_; }

  /// Exact net log-rho coefficient of the raw covering potential
  /// (c_M + 2 a1); zero for every n >= 3 profile.
  const Rational& c_log_net() const { return c_net_; }

  double remainder_at_tau(double tau) const;
  double tau_from_radius(double abs_z) const;
  double remainder_at_radius(double abs_z) const;

  /// Direct evaluation of P_norm (cancellation-prone at large rho'; used to
  /// cross-check the remainder assembly at moderate radii).
  double normalized_potential_direct(double rho_normalized) const;

  /// Exact coefficient of 1/tau in the remainder; vanishes identically when
  /// the first correction sits at a deeper order (e.g. n = 4).
  Rational leading_tau_coefficient_exact() const;

 private:
  bool n_is_two() const { return profile_.base_dim + 1 == 2; }

  MomentumProfile profile_;
  int k_ = 1;
  double c_m_ = 2.0;
  Rational c_net_{0};
  double c_log_target_ = 0.0;
  double lambda_ = 1.0, s_ = 1.0, c_inf_ = 0.0;
  double two_lambda_a0_ = 1.0;
  Rational a0_{0}, a1_{0}, lambda_exact_{1};
  PrimitiveExpansion r_exp_, f_exp_;  // tails with numeric constants
  double g1_ = 0.0;                   // (2/k) * r_1
};

/// Log-log power fit of given (radius, remainder) samples; exposed so planted
/// synthetic signals run through the same fitter as the profile path.
PowerFit fit_power_remainder(const std::vector<std::pair<double, double>>& samples);

/// Subtracts the exact leading terms of the normalized AE potential and fits
/// the remainder's decay over dyadic radii in the window. The exponent is
/// reported in |z|: -2 for the n = 2 family and 4 - 2n for n >= 3.
PowerFit fit_ae_remainder(const MomentumProfile& p, std::pair<double, double> radius_window);

struct CuspCoefficientFit {
  double coefficient = 0.0;  // of -log(a - log|z|^2)
  double offset_a = 0.0;     // fitted constant a
  double r_squared = 0.0;
  std::pair<double, double> window{0.0, 0.0};  // in |z|_h^2
};

/// Fiberwise potential near the cusp in the class normalization (half the
/// ansatz potential for the n = 2 family, the full one otherwise), the
/// convention in which the expansion coefficient is 2/(n(n-1)), resp. 1.
double cusp_fiber_potential(const MomentumProfile& p, double z_h_sq);

/// Joint fit of value ~ c0 + c1 log(rho) - b log(a - log(rho)) + corrections
/// on (log rho, value) samples, scanning the constant a.
CuspCoefficientFit fit_cusp_model(const std::vector<std::pair<double, double>>& log_rho_and_value);

/// Fits the cusp expansion coefficient of a profile over a window in |z|_h^2
/// deep inside the cusp; expected 2/(n(n-1)) for n >= 3 and 1 for n = 2.
CuspCoefficientFit fit_cusp_coefficient(const MomentumProfile& p,
                                        std::pair<double, double> depth_window);

}  // namespace sfk
