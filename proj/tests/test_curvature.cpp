#include "doctest.h"

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "sfk/curvature.hpp"

using namespace sfk;

namespace {

RadialKahlerPotential euclidean(int n) {
  RadialKahlerPotential p;
  p.n = n;
  p.analytic = [](const Jet<4>& rho) { return rho; };
  return p;
}

// test-side oracle: determinant of g_ij = F' delta_ij + F'' conj(z_i) z_j by
// straight LU elimination at a random point with |z|^2 = rho
double direct_determinant(int n, double fp, double fpp, const std::vector<std::complex<double>>& z) {
  std::vector<std::vector<std::complex<double>>> g(n, std::vector<std::complex<double>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      g[i][j] = fpp * std::conj(z[i]) * z[j];
      if (i == j) g[i][j] += fp;
    }
  std::complex<double> det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int row = col + 1; row < n; ++row)
      if (std::abs(g[row][col]) > std::abs(g[pivot][col])) pivot = row;
    if (pivot != col) {
      std::swap(g[pivot], g[col]);
      det = -det;
    }
    det *= g[col][col];
    for (int row = col + 1; row < n; ++row) {
      const std::complex<double> f = g[row][col] / g[col][col];
      for (int k = col; k < n; ++k) g[row][k] -= f * g[col][k];
    }
  }
  return det.real();
}

}  // namespace

TEST_CASE("Euclidean metric is flat") {
  for (int n : {2, 3, 4}) {
    auto p = euclidean(n);
    for (double rho : {0.1, 1.0, 25.0}) {
      auto rep = scalar_curvature_radial(p, rho);
      CHECK(std::abs(rep.scalar) <= 1e-13);
      CHECK(rep.det_g == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(rep.margin_first == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(rep.margin_mixed == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("Fubini-Study scalar curvature n(n+1)") {
  // F = log(1 + rho) gives the FS metric in an affine chart; the complex-trace
  // scalar curvature is n(n+1) (hand-derived: log det g = -(n+1) log(1+rho))
  for (int n : {2, 3, 4}) {
    RadialKahlerPotential p;
    p.n = n;
    p.analytic = [](const Jet<4>& rho) { return log(1.0 + rho); };
    for (double rho : {0.2, 1.0, 9.0}) {
      auto rep = scalar_curvature_radial(p, rho);
      CHECK(rep.scalar == doctest::Approx(n * (n + 1.0)).epsilon(1e-11));
      CHECK(rep.scalar > 0.0);
      // Einstein: both Ricci eigenvalues equal n + 1
      CHECK(rep.ricci_base == doctest::Approx(n + 1.0).epsilon(1e-11));
      CHECK(rep.ricci_fiber == doctest::Approx(n + 1.0).epsilon(1e-11));
    }
  }
}

TEST_CASE("momentum profiles are scalar-flat through the radial oracle") {
  // the oracle shares no formula with Eq.-level momentum curvature; agreement
  // at zero is the two-path check
  SUBCASE("cuspidal CP^1 at moderate radius") {
    auto pot = potential_from_profile(profile_cp1(1, Rational(0)));
    auto rep = scalar_curvature_radial(pot, 25.0);
    CHECK(std::abs(rep.scalar) <= 1e-6);
  }
  SUBCASE("Burns-Simanca") {
    auto pot = potential_from_profile(profile_cp1(1, Rational(1)));
    CHECK(std::abs(scalar_curvature_radial(pot, 4.0).scalar) <= 1e-6);
  }
  SUBCASE("higher dimension") {
    auto pot = potential_from_profile(profile_cpn(3, -1));
    CHECK(std::abs(scalar_curvature_radial(pot, 9.0).scalar) <= 1e-6);
  }
}

TEST_CASE("oracle agrees with the momentum formula pointwise across the map tau -> rho") {
  for (auto& prof : {profile_cp1(2, Rational(0)), profile_cp1(1, Rational(1, 2)),
                     profile_cpn(3, -1)}) {
    auto pot = potential_from_profile(prof);
    for (double tau : {0.3, 1.0, 7.0}) {
      const double r = radial_log_coordinate(prof, tau);
      const double rho = std::exp(2.0 * r / prof.bundle_k);
      const double s_momentum = scalar_curvature_momentum(prof, tau);
      const double s_oracle = scalar_curvature_radial(pot, rho).scalar;
      CHECK(std::abs(s_momentum - s_oracle) <= 1e-6);
    }
  }
}

TEST_CASE("deep cusp evaluation stays finite and scalar-flat") {
  auto pot = potential_from_profile(profile_cp1(1, Rational(0)));
  // tau = 1e-2 corresponds to rho ~ e^(-204); the rescaled evaluation path
  // must survive it
  auto prof = profile_cp1(1, Rational(0));
  const double r = radial_log_coordinate(prof, 1e-2);
  const double rho = std::exp(2.0 * r);
  REQUIRE(rho > 0.0);
  auto rep = scalar_curvature_radial(pot, rho);
  CHECK(std::abs(rep.scalar) <= 1e-6);
  CHECK(std::isfinite(rep.log_det_g));
}

TEST_CASE("determinant identity against direct n x n elimination") {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int n : {2, 3, 4}) {
    RadialKahlerPotential p;
    p.n = n;
    p.log_coeff = 0.5;
    p.analytic = [](const Jet<4>& rho) { return rho + 0.3 * log(1.0 + rho); };
    for (int rep_i = 0; rep_i < 5; ++rep_i) {
      std::vector<std::complex<double>> z(n);
      double rho = 0.0;
      for (auto& zi : z) {
        zi = {unit(rng), unit(rng)};
        rho += std::norm(zi);
      }
      auto rep = scalar_curvature_radial(p, rho);
      const double direct = direct_determinant(n, rep.margin_first,
                                               (rep.margin_mixed - rep.margin_first) / rho, z);
      CHECK(std::abs(rep.det_g - direct) <= 1e-12 * std::abs(direct));
    }
  }
}

TEST_CASE("scale covariance: F -> eps^2 F(rho/eps^2) multiplies S by eps^-2") {
  RadialKahlerPotential p;
  p.n = 2;
  p.analytic = [](const Jet<4>& rho) { return rho + log(1.0 + rho); };
  const double eps = 0.37;
  RadialKahlerPotential scaled;
  scaled.n = 2;
  scaled.analytic = [eps](const Jet<4>& rho) {
    Jet<4> inner = rho / (eps * eps);
    return (eps * eps) * (inner + log(1.0 + inner));
  };
  for (double rho : {0.5, 2.0}) {
    const double s = scalar_curvature_radial(p, rho).scalar;
    const double s_scaled = scalar_curvature_radial(scaled, rho * eps * eps).scalar;
    CHECK(s_scaled == doctest::Approx(s / (eps * eps)).epsilon(1e-8));
  }
}

TEST_CASE("finite-difference secondary cross-check of the jet path") {
  // the jet route is the primary path; central differences of F reproduce the
  // scalar curvature at a much looser tolerance
  auto scalar_by_fd = [](int n, const std::function<double(double)>& f_of_rho, double rho) {
    const double h = 1e-3 * rho;
    auto d = [&](int order, double x) {
      switch (order) {
        case 1:
          return (f_of_rho(x + h) - f_of_rho(x - h)) / (2 * h);
        case 2:
          return (f_of_rho(x + h) - 2 * f_of_rho(x) + f_of_rho(x - h)) / (h * h);
        default:
          return 0.0;
      }
    };
    auto log_det = [&](double x) {
      const double fp = d(1, x), fpp = d(2, x);
      return (n - 1) * std::log(fp) + std::log(fp + x * fpp);
    };
    const double hh = 4e-3 * rho;
    const double lp = (log_det(rho + hh) - log_det(rho - hh)) / (2 * hh);
    const double lpp = (log_det(rho + hh) - 2 * log_det(rho) + log_det(rho - hh)) / (hh * hh);
    const double fp = d(1, rho), fpp = d(2, rho);
    return -((n - 1) * lp / fp + (lp + rho * lpp) / (fp + rho * fpp));
  };

  for (int n : {2, 3}) {
    RadialKahlerPotential p;
    p.n = n;
    p.log_coeff = 0.5;
    p.analytic = [](const Jet<4>& rho) { return rho + 0.3 * log(1.0 + rho); };
    auto f_plain = [&](double rho) { return rho + 0.3 * std::log(1.0 + rho) + 0.5 * std::log(rho); };
    for (double rho : {0.7, 2.0, 11.0}) {
      const double jets = scalar_curvature_radial(p, rho).scalar;
      const double fd = scalar_by_fd(n, f_plain, rho);
      CHECK(std::abs(jets - fd) <= 1e-4 * std::max(1.0, std::abs(jets)));
    }
  }
}

TEST_CASE("positivity scan and degenerate metrics") {
  auto flat = euclidean(2);
  std::array<double, 3> grid{0.5, 1.0, 2.0};
  CHECK(positivity_scan(flat, grid) == doctest::Approx(1.0));

  RadialKahlerPotential neg;
  neg.n = 2;
  neg.analytic = [](const Jet<4>& rho) { return -1.0 * rho; };
  CHECK(positivity_scan(neg, grid) < 0.0);
  CHECK_THROWS_AS(scalar_curvature_radial(neg, 1.0), DegenerateMetricError);
}

TEST_CASE("log-term bookkeeping keeps F' exact") {
  RadialKahlerPotential p;
  p.n = 2;
  p.log_coeff = 2.0;
  p.analytic = [](const Jet<4>& rho) { return rho; };
  const double rho = 1e-6;
  auto rep = scalar_curvature_radial(p, rho);
  CHECK(rep.margin_first == doctest::Approx(1.0 + 2.0 / rho).epsilon(1e-12));
}
