#pragma once

#include <functional>
#include <span>
#include <stdexcept>

#include "sfk/jet.hpp"
#include "sfk/momentum.hpp"

namespace sfk {

class DegenerateMetricError : public std::runtime_error {
 public:
  explicit DegenerateMetricError(const std::string& what) : std::runtime_error(what) {}
};

/// A U(n)-invariant Kahler potential F(rho) on C^n \ {0}, rho = |z|^2, split
/// as F = analytic(rho) + log_coeff * log(rho) so the log term differentiates
/// exactly. The analytic part must be jet-evaluable to order 4.
struct RadialKahlerPotential {
  int n = 2;
  double log_coeff = 0.0;
  std::function<Jet<4>(const Jet<4>&)> analytic;
};

struct CurvatureReport {
  double rho = 0.0;
  double scalar = 0.0;
  /// Ricci eigenvalue transverse to the fiber direction and along it.
  double ricci_base = 0.0;
  double ricci_fiber = 0.0;
  double det_g = 0.0;      // (F')^(n-1) (F' + rho F''); may overflow at extreme radii
  double log_det_g = 0.0;  // always finite
  double margin_first = 0.0;  // F'
  double margin_mixed = 0.0;  // F' + rho F''
};

/// Scalar curvature of i ddbar F at radius rho, from fourth derivatives of F
/// propagated through jets (no finite differences). The evaluation is run in
/// internally rescaled coordinates, so it stays stable at radii as extreme as
/// rho ~ 1e-90. Throws DegenerateMetricError if positivity fails at rho.
CurvatureReport scalar_curvature_radial(const RadialKahlerPotential& p, double rho);

/// Minimum of {F', F' + rho F''} over the grid: positive iff the metric is
/// positive definite on the sampled set.
double positivity_scan(const RadialKahlerPotential& p, std::span<const double> rho_grid);

/// The full covering-space potential of a momentum profile:
///   F(rho) = c_M log(rho) + 2 f(tau(rho)),  log(rho) = (2/k) r(tau).
/// This shares no formula with the momentum-side scalar curvature, which is
/// what makes the two paths independent oracles of each other.
RadialKahlerPotential potential_from_profile(const MomentumProfile& p);

}  // namespace sfk
