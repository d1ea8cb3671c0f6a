#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "sfk/asymptotics.hpp"
#include "sfk/curvature.hpp"
#include "sfk/momentum.hpp"

namespace sfk {

/// Radius schedule of the gluing: r_eps = eps^((2n-1)/(2n+1)), R_eps = r_eps/eps.
struct GluingSchedule {
  double epsilon = 0.0;
  int n = 2;
  double r_eps = 0.0;
  double R_eps = 0.0;
};

GluingSchedule make_schedule(double epsilon, int n);

/// Quintic smoothstep cutoff: 0 for x <= lo, 1 for x >= hi, C^2 across the
/// plateaus with explicitly bounded higher differences.
struct CutoffSpec {
  double lo = 1.0;
  double hi = 2.0;

  template <std::size_t N>
  Jet<N> eval(const Jet<N>& x) const {
    if (x.value() <= lo) return Jet<N>(0.0);
    if (x.value() >= hi) return Jet<N>(1.0);
    Jet<N> t = (x - lo) / (hi - lo);
    return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
  }
  double operator()(double x) const { return eval(Jet<0>(x)).value(); }

  /// Sampled sup of |gamma^(j)| on [lo, hi], j <= 4.
  double derivative_bound(int order) const;
};

/// The assembled approximate-metric potential: pure base piece outside
/// |z| = 2 r_eps, the eps^2-scaled normalized model inside |z| = r_eps, and
/// the cutoff blend on the annulus. Evaluation is radial, F as a function of
/// rho = |z|^2.
class GluedPotential {
 public:
  GluedPotential(GluingSchedule sched, std::function<Jet<4>(const Jet<4>&)> base_phi1,
                 const MomentumProfile& model);

  const GluingSchedule& schedule() const { return sched_; }
  const CutoffSpec& cutoff() const { return cutoff_; }

  /// Potential at |z| through the region-branching assembled formula.
  double operator()(double abs_z) const { return assembled(abs_z); }
  double assembled(double abs_z) const;
  double outer_piece(double abs_z) const;  // rho + phi1(rho)
  double inner_piece(double abs_z) const;  // eps^2 model at z/eps
  /// The blended correction F - rho (vanishing for the Euclidean degenerate case).
  double correction(double abs_z) const;

  Jet<4> assembled_jet(const Jet<4>& rho) const;

  /// View as a radial potential for the curvature oracle.
  RadialKahlerPotential as_radial_potential() const;

 private:
  Jet<4> model_term_jet(const Jet<4>& rho) const;  // c_t log(rho/eps^2) + phi2(rho/eps^2)
  GluingSchedule sched_;
  CutoffSpec cutoff_;
  std::function<Jet<4>(const Jet<4>&)> phi1_;
  std::shared_ptr<AeExpansion> model_;
  std::function<Jet<4>(const Jet<4>&)> model_analytic_raw_;
  double model_log_coeff_raw_ = 0.0;
};

GluedPotential assemble_glued_potential(const GluingSchedule& sched,
                                        std::function<Jet<4>(const Jet<4>&)> base_phi1,
                                        const MomentumProfile& model);

/// Scalar-curvature deviation of the glued metric over a log-spaced annulus
/// grid. sup_physical is sup |S(omega_eps) - s_base| as-is; sup_model_scale
/// is the same quantity for the eps^-2 rescaled metric the model piece is
/// built in (eps^2 times the physical value). The physical sup grows like
/// eps^(-2/(2n+1)) because the cutoff derivatives act on a shrinking
/// annulus; the approximation property of the construction shows up in the
/// model-scale number, which decreases to zero.
struct GlueDeviation {
  double sup_physical = 0.0;
  double sup_model_scale = 0.0;
};
GlueDeviation glued_scalar_deviation(const GluedPotential& g, double s_base,
                                     int grid_points = 64);

struct DeviationSweepRow {
  double epsilon = 0.0;
  double sup_physical = 0.0;
  double sup_model_scale = 0.0;
  double positivity_margin = 0.0;
};

struct DeviationSweep {
  std::vector<DeviationSweepRow> rows;
  double fitted_decay_exponent = 0.0;  // of sup_model_scale against epsilon
};

/// Runs the assembly over an epsilon list and fits the decay of the
/// model-scale deviation.
DeviationSweep deviation_sweep(const std::vector<double>& epsilons, int n,
                               std::function<Jet<4>(const Jet<4>&)> base_phi1,
                               const MomentumProfile& model, double s_base);

/// min over the annulus grid of the positivity margins of g_eps.
double glued_positivity_margin(const GluedPotential& g, int grid_points = 64);

/// sup over the annulus of |correction| / |z|^4.
double annulus_correction_constant(const GluedPotential& g, int grid_points = 64);

// --- biharmonic boundary extensions -----------------------------------------

/// One spherical-harmonic boundary mode: H = h, Laplacian(H) = k on the unit
/// sphere, carried by a degree-`degree` harmonic.
struct HarmonicMode {
  int degree = 0;
  double h = 0.0;
  double k = 0.0;
};

/// Radial profile c1 r^p1 + c2 r^p2 multiplying the degree-d harmonic.
struct RadialBiharmonicSolution {
  int degree = 0;
  double c1 = 0.0;
  int p1 = 0;
  double c2 = 0.0;
  int p2 = 0;

  double eval(double r) const;
  double laplacian(double r, int real_dim) const;
};

inline constexpr int kDefaultHarmonicTruncation = 8;

/// Laplacian of r^power Y_degree on R^real_dim is this coefficient times
/// r^(power-2) Y_degree (exact integer arithmetic).
long biharmonic_laplacian_coefficient(long power, long degree, long real_dim);

/// Interior biharmonic extension on B_1 of C^n: per mode, the solution in
/// span{r^d, r^(d+2)} matching H = h and Lap H = k on the boundary.
std::vector<RadialBiharmonicSolution> biharmonic_interior(const std::vector<HarmonicMode>& modes,
                                                          int n);

/// Exterior decaying extension on C^n \ B_1, solutions confined to
/// span{r^(2-2n-d), r^(4-2n-d)}. Requires the mean of k over the sphere
/// (its degree-0 coefficient) to vanish.
std::vector<RadialBiharmonicSolution> biharmonic_exterior(const std::vector<HarmonicMode>& modes,
                                                          int n);

}  // namespace sfk
