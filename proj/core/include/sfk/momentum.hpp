#pragma once

#include <utility>

#include "sfk/polynomial.hpp"
#include "sfk/quadrature.hpp"

namespace sfk {

/// Which base data the profile was built against. The two families use
/// different Fubini-Study scalings, so phi values are never compared across
/// normalizations directly; only scalar-curvature residuals are.
enum class BaseNormalization {
  cp1_twisted,       // M = CP^1, omega_M = 2 omega_FS with Ric omega_FS = 2 omega_FS
  cpn_fubini_study,  // M = CP^{n-1}, omega_M = omega_FS with Ric omega_FS = n omega_FS
};

/// A momentum profile phi(tau) on I = (0, inf) together with the base data
/// Q(tau) and Scal(g_M(tau)) it was constructed against. All three are exact
/// rational functions, which gives the scalar-curvature identity a symbolic
/// path alongside the numeric one.
struct MomentumProfile {
  int base_dim = 1;   // complex dimension of the base
  int bundle_k = 1;   // twist of O(-k)
  Rational cone_beta{0};
  BaseNormalization normalization = BaseNormalization::cp1_twisted;

  RatFun phi;
  RatFun Q;
  RatFun scal_base;

  /// Pullback potential of omega_M on the covering is base_potential_coeff * log(rho).
  Rational base_potential_coeff{2};
  /// Integration constant pinning f at the tau0 = 1 basepoint.
  double f_offset = 0.0;

  double complex_dim() const { return base_dim + 1; }
};

/// Scalar-flat profiles over CP^1 with cone angle beta in [0, 1]:
/// phi(tau) = tau(tau + 2 beta) / (1 + k tau / 2). beta = 0 is the cuspidal
/// profile, beta = 1 recovers Burns-Simanca.
MomentumProfile profile_cp1(int k, const Rational& beta);

/// Scalar-flat cuspidal profiles over CP^{n-1}, n >= 3, on O(beta) with
/// beta <= -1.
MomentumProfile profile_cpn(int n, long bundle_beta);

/// Builds a profile with the same base data but phi replaced by the given
/// rational function (perturbed profiles for negative controls).
MomentumProfile with_profile(const MomentumProfile& base, RatFun phi);

/// Pointwise scalar curvature Scal(g_M(tau)) - (Q phi)''/(2Q).
double scalar_curvature_momentum(const MomentumProfile& p, double tau);

/// The residual 2 Q Scal(g_M) - (Q phi)'' as an exact rational function;
/// identically zero for the scalar-flat families.
RatFun sfk_residual_symbolic(const MomentumProfile& p);

/// r(tau) = integral of 1/phi from tau0, by adaptive quadrature.
double radial_log_coordinate(const MomentumProfile& p, double tau, double tau0 = 1.0);

/// f(tau) = integral of tau/phi from 1, plus the family's closed-form offset.
double kahler_potential_f(const MomentumProfile& p, double tau);

/// Inverse of radial_log_coordinate (tau0 = 1): the unique tau with r(tau) = r.
double invert_radius(const MomentumProfile& p, double r);

/// Divergence diagnostics of the r- and s-integrals at both ends, detected by
/// dyadic refinement of the integral increments.
struct CompletenessReport {
  bool r_divergent_at_zero = false;
  bool r_divergent_at_infinity = false;
  bool s_divergent_at_zero = false;
  bool s_divergent_at_infinity = false;
  bool finite_cusp_area_at_zero = false;  // infinite distance but finite fiber area
  bool complete = false;                  // s-integral diverges at both ends
};
CompletenessReport completeness_report(const MomentumProfile& p);

/// Local LeBrun-ansatz data for the CP^1 family:
///   u = log(Q phi / (1 + (x^2+y^2)/denom_scale)^2),  w = 1/phi (+ w_shift).
/// w_shift is a corruption knob for negative controls.
struct LeBrunFrame {
  int k = 1;
  double beta = 0.0;
  double denom_scale = 4.0;
  double w_shift = 0.0;
};

/// Residuals of the two Toda-lattice equations
///   dxx u + dyy u + dtt(e^u)     and   dxx w + dyy w + dtt(w e^u)
/// at (x, y, tau), via second-order jets in each variable.
std::pair<double, double> toda_residuals(const LeBrunFrame& frame, double x, double y,
                                         double tau);

/// Scans the denominator scale of u and returns the value minimizing the
/// summed Toda residuals over a fixed sample set (resolves the ambiguity
/// between candidate scales 2 and 4).
double calibrate_lebrun_scale(int k, double beta);

/// phi''(0) as an exact rational (drives the cusp expansion coefficients).
Rational phi_second_derivative_at_zero(const MomentumProfile& p);

}  // namespace sfk
