#pragma once

#include <complex>
#include <vector>

#include "sfk/momentum.hpp"
#include "sfk/spectral.hpp"

namespace sfk {

class WeightOnWallError : public std::invalid_argument {
 public:
  explicit WeightOnWallError(const std::string& what) : std::invalid_argument(what) {}
};

/// Per-eigenmode data of the model Lichnerowicz operator on the cusp
/// cylinder: the base Laplace eigenvalue and the induced Lichnerowicz
/// eigenvalue mu = lambda^2/2 - lambda on that eigenspace.
struct IndicialProblem {
  double lambda_E = 0.0;
  double mu_E = 0.0;

  static IndicialProblem from_base_eigenvalue(double lambda);
};

/// Indicial polynomial of the model operator on S^1-invariant functions,
/// evaluated at s through the substitution sigma = s^2 - s:
///   p(s) = sigma^2/2 + (lambda - 1/2) sigma + mu.
std::complex<double> model_operator_symbol(const IndicialProblem& prob, std::complex<double> s);

struct IndicialSpectrum {
  std::vector<std::complex<double>> roots;  // 4 roots of the quartic in s
  double kappa = 0.0;  // smallest strictly positive real root (infinity if none)
};

/// All indicial roots of the mode, from the exact sigma-factorization.
IndicialSpectrum indicial_roots(const IndicialProblem& prob);

/// The same quartic solved through a companion-matrix eigenvalue problem,
/// as an independent cross-check of the factorization route.
std::vector<std::complex<double>> indicial_roots_companion(const IndicialProblem& prob);

/// Smallest strictly positive real indicial root across base modes up to
/// j_max; monotone_flag reports whether adding modes ever lowered the
/// running minimum (it should not, since eigenvalues grow).
double smallest_positive_root(int n, int j_max, bool* monotone_flag = nullptr);

struct FredholmIndexReport {
  int ae_local_index = 0;    // +1 for delta in (0, 1)
  int cusp_local_index = 0;  // -(n^2 - 1)
  int index = 0;
};

/// Fredholm index of the Lichnerowicz operator for weights eta in (0, kappa)
/// and delta in (0, 1): the sum of the local indices from the two ends,
/// 1 - (n^2 - 1). Throws WeightOnWallError for weights outside the legal
/// windows or on an indicial wall.
FredholmIndexReport fredholm_index(int n, double eta, double delta);

struct DecayFit {
  double rate = 0.0;       // fitted exponential decay rate of the coefficient gap
  double fiber_rate = 0.0;
  double base_rate = 0.0;
};

/// Compares the S^1-invariant radial metric coefficients of g_HS against the
/// model cusp metric (1/(n(n-1)))(dt^2 + e^{-2t} Theta^2) + p* g_FS and fits
/// the exponential decay of the relative gaps over the t grid.
DecayFit model_vs_full_decay(const MomentumProfile& p, const std::vector<double>& t_grid,
                             double lambda = 2.0);

}  // namespace sfk
