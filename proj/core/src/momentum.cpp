#include "sfk/momentum.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "sfk/jet.hpp"

namespace sfk {

MomentumProfile profile_cp1(int k, const Rational& beta) {
  if (k < 1) throw std::invalid_argument("profile_cp1: k must be >= 1");
  if (beta < 0 || beta > 1) throw std::invalid_argument("profile_cp1: beta must lie in [0, 1]");

  MomentumProfile p;
  p.base_dim = 1;
  p.bundle_k = k;
  p.cone_beta = beta;
  p.normalization = BaseNormalization::cp1_twisted;
  p.base_potential_coeff = 2;

  const Rational half_k = frac(k, 2);
  Poly tau = Poly::monomial(Rational(1), 1);
  Poly q_poly = Poly(Rational(1)) + Poly::monomial(half_k, 1);  // 1 + k tau / 2
  p.phi = RatFun(tau * (tau + Poly(2 * beta)), q_poly);
  p.Q = RatFun(q_poly);
  p.scal_base = RatFun(Poly(Rational(1)), q_poly);

  // f closed form: k tau / 2 + (1 - k beta) log(tau + 2 beta), evaluated at tau0 = 1
  const double beta_d = beta.get_d();
  const double log_term = (beta == 0) ? 0.0
                                      : (1.0 - k * beta_d) * std::log(1.0 + 2.0 * beta_d);
  p.f_offset = 0.5 * k + log_term;
  return p;
}

MomentumProfile profile_cpn(int n, long bundle_beta) {
  if (n < 3)
    throw std::invalid_argument("profile_cpn: dimension must be >= 3; use profile_cp1 for n = 2");
  if (bundle_beta > -1) throw std::invalid_argument("profile_cpn: bundle degree must be <= -1");

  const Rational beta(bundle_beta);
  MomentumProfile p;
  p.base_dim = n - 1;
  p.bundle_k = static_cast<int>(-bundle_beta);
  p.cone_beta = 0;
  p.normalization = BaseNormalization::cpn_fubini_study;
  p.base_potential_coeff = 1;
  p.f_offset = 0.0;

  // u = 1 - beta tau; phi = (2/beta^2) (u^n - n u + (n-1)) / u^(n-1)
  Poly u = Poly(Rational(1)) + Poly::monomial(-beta, 1);
  Poly u_pow(Rational(1));
  for (int i = 0; i < n - 1; ++i) u_pow = u_pow * u;  // u^(n-1)
  Poly numerator = u_pow * u - Rational(n) * u + Poly(Rational(n - 1));
  const Rational front = Rational(2) / (beta * beta);
  p.phi = RatFun(front * numerator, u_pow);
  p.Q = RatFun(u_pow);
  p.scal_base = RatFun(Poly(Rational(static_cast<long>(n) * (n - 1))), u);
  return p;
}

MomentumProfile with_profile(const MomentumProfile& base, RatFun phi) {
  MomentumProfile p = base;
  p.phi = std::move(phi);
  return p;
}

double scalar_curvature_momentum(const MomentumProfile& p, double tau) {
  if (!(tau > 0.0)) throw std::domain_error("scalar_curvature_momentum: tau must be positive");
  RatFun q_phi_dd = (p.Q * p.phi).derivative().derivative();
  return p.scal_base.eval(tau) - q_phi_dd.eval(tau) / (2.0 * p.Q.eval(tau));
}

RatFun sfk_residual_symbolic(const MomentumProfile& p) {
  return Rational(2) * (p.Q * p.scal_base) - (p.Q * p.phi).derivative().derivative();
}

namespace {

double radial_quad(const DRatFun& phi, double tau0, double tau) {
  return integrate([&phi](double x) { return 1.0 / phi.eval(x); }, tau0, tau);
}

}  // namespace

double radial_log_coordinate(const MomentumProfile& p, double tau, double tau0) {
  if (!(tau > 0.0) || !(tau0 > 0.0))
    throw std::domain_error("radial_log_coordinate: tau and tau0 must be positive");
  return radial_quad(p.phi.to_double(), tau0, tau);
}

double kahler_potential_f(const MomentumProfile& p, double tau) {
  if (!(tau > 0.0)) throw std::domain_error("kahler_potential_f: tau must be positive");
  const DRatFun phi = p.phi.to_double();
  return integrate([&phi](double x) { return x / phi.eval(x); }, 1.0, tau) + p.f_offset;
}

double invert_radius(const MomentumProfile& p, double r) {
  if (!std::isfinite(r)) throw std::out_of_range("invert_radius: r must be finite");
  const DRatFun phi = p.phi.to_double();

  // bracket the root; r(tau) is strictly increasing since phi > 0
  double lo = 1.0, hi = 1.0;
  double r_lo = 0.0, r_hi = 0.0;  // r at tau0 = 1 is zero by construction
  int guard = 0;
  while (r_lo > r) {
    lo *= 0.25;
    r_lo = radial_quad(phi, 1.0, lo);
    if (++guard > 600 || lo < 1e-280)
      throw std::out_of_range("invert_radius: r below the attainable range");
  }
  guard = 0;
  while (r_hi < r) {
    hi *= 4.0;
    r_hi = radial_quad(phi, 1.0, hi);
    if (++guard > 600 || hi > 1e280)
      throw std::out_of_range("invert_radius: r above the attainable range");
  }

  if (lo == 1.0 && hi == 1.0) return 1.0;
  // Newton with bisection safeguard; r'(tau) = 1/phi
  double tau = std::sqrt(lo * hi);
  for (int i = 0; i < 200; ++i) {
    const double rv = radial_quad(phi, 1.0, tau);
    if (rv > r)
      hi = tau;
    else
      lo = tau;
    const double step = (rv - r) * phi.eval(tau);
    double next = tau - step;
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    const double move = std::abs(next - tau);
    tau = next;
    if (move <= 1e-15 * tau) break;
  }
  return tau;
}

namespace {

/// Classifies int f over dyadic shells toward an endpoint as divergent or
/// convergent from the growth ratio of the shell increments.
bool increments_diverge(const std::function<double(double)>& f, double anchor, bool toward_zero) {
  double ratio_acc = 0.0;
  int ratio_count = 0;
  double prev = -1.0;
  double a = anchor;
  for (int j = 0; j < 42; ++j) {
    const double b = toward_zero ? a * 0.5 : a * 2.0;
    const double inc = std::abs(integrate(f, a, b, {1e-10, 1e-10, 60}));
    if (prev > 0.0 && j >= 20) {
      ratio_acc += inc / prev;
      ++ratio_count;
    }
    prev = inc;
    a = b;
  }
  const double ratio = ratio_acc / ratio_count;
  // geometric decay with ratio below ~0.85 means the tail is summable
  return ratio > 0.85;
}

}  // namespace

CompletenessReport completeness_report(const MomentumProfile& p) {
  const DRatFun phi = p.phi.to_double();
  auto inv_phi = [&phi](double x) { return 1.0 / phi.eval(x); };
  auto inv_sqrt_phi = [&phi](double x) { return 1.0 / std::sqrt(phi.eval(x)); };

  CompletenessReport rep;
  rep.r_divergent_at_zero = increments_diverge(inv_phi, 1.0, true);
  rep.r_divergent_at_infinity = increments_diverge(inv_phi, 1.0, false);
  rep.s_divergent_at_zero = increments_diverge(inv_sqrt_phi, 1.0, true);
  rep.s_divergent_at_infinity = increments_diverge(inv_sqrt_phi, 1.0, false);
  // the fiber area toward tau = 0 is int dtau dtheta, finite on any profile
  rep.finite_cusp_area_at_zero = rep.s_divergent_at_zero;
  rep.complete = rep.s_divergent_at_zero && rep.s_divergent_at_infinity;
  return rep;
}

std::pair<double, double> toda_residuals(const LeBrunFrame& frame, double x, double y,
                                         double tau) {
  if (!(tau > 0.0)) throw std::domain_error("toda_residuals: tau must be positive");
  MomentumProfile p = profile_cp1(frame.k, Rational(frame.beta));
  const RatFun q_phi = p.Q * p.phi;  // tau (tau + 2 beta)
  const double s = frame.denom_scale;

  auto u_of = [&](auto xx, auto yy, auto tt) {
    auto q = xx * xx + yy * yy;
    auto base = 1.0 + q / s;
    return log(q_phi.eval_as(tt)) - 2.0 * log(base);
  };

  using J2 = Jet<2>;
  const J2 jx = J2::variable(x), jy = J2::variable(y), jt = J2::variable(tau);
  const J2 cx(x), cy(y), ct(tau);

  const double uxx = u_of(jx, cy, ct).derivative(2);
  const double uyy = u_of(cx, jy, ct).derivative(2);
  const double eu_tt = exp(u_of(cx, cy, jt)).derivative(2);
  const double res_u = uxx + uyy + eu_tt;

  auto w_of = [&](auto tt) { return 1.0 / p.phi.eval_as(tt) + frame.w_shift; };
  // w is independent of x and y, so only the tau term contributes beyond shift
  const double weu_tt = (w_of(jt) * exp(u_of(cx, cy, jt))).derivative(2);
  const double res_w = weu_tt;
  return {res_u, res_w};
}

double calibrate_lebrun_scale(int k, double beta) {
  const double sample_pts[][3] = {{0.0, 0.0, 1.0}, {1.0, 1.0, 2.0}, {0.5, -0.3, 0.7},
                                  {-1.2, 0.4, 3.0}, {0.2, 0.9, 0.25}};
  auto objective = [&](double s) {
    LeBrunFrame frame{k, beta, s, 0.0};
    double acc = 0.0;
    for (const auto& pt : sample_pts) {
      auto [ru, rw] = toda_residuals(frame, pt[0], pt[1], pt[2]);
      acc += ru * ru + rw * rw;
    }
    return acc;
  };

  double best_s = 1.0, best_val = std::numeric_limits<double>::infinity();
  for (double s = 1.0; s <= 8.0; s += 0.05) {
    const double v = objective(s);
    if (v < best_val) {
      best_val = v;
      best_s = s;
    }
  }
  // golden-section refinement around the grid minimum
  double a = best_s - 0.05, b = best_s + 0.05;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int i = 0; i < 80; ++i) {
    const double c = b - gr * (b - a);
    const double d = a + gr * (b - a);
    if (objective(c) < objective(d))
      b = d;
    else
      a = c;
  }
  return 0.5 * (a + b);
}

Rational phi_second_derivative_at_zero(const MomentumProfile& p) {
  return p.phi.derivative().derivative().eval(Rational(0));
}

}  // namespace sfk
