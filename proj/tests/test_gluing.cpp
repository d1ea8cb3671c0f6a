#include "doctest.h"

#include <cmath>

#include "sfk/gluing.hpp"

using namespace sfk;

TEST_CASE("schedule formula") {
  auto s = make_schedule(0.01, 2);
  CHECK(s.r_eps == doctest::Approx(std::pow(0.01, 3.0 / 5.0)).epsilon(1e-15));
  CHECK(s.r_eps == doctest::Approx(6.31e-2).epsilon(1e-3));
  CHECK(s.R_eps == doctest::Approx(6.31).epsilon(1e-3));

  auto s3 = make_schedule(0.01, 3);
  CHECK(s3.r_eps == doctest::Approx(std::pow(0.01, 5.0 / 7.0)).epsilon(1e-15));

  // r_eps -> 1 as eps -> 1
  CHECK(make_schedule(0.999999, 4).r_eps == doctest::Approx(1.0).epsilon(1e-5));
  CHECK_THROWS_AS(make_schedule(1.0, 2), std::domain_error);
  CHECK_THROWS_AS(make_schedule(0.0, 2), std::domain_error);
}

TEST_CASE("cutoff plateaus and bounded derivatives") {
  CutoffSpec g;
  CHECK(g(0.5) == 0.0);
  CHECK(g(1.0) == 0.0);
  CHECK(g(2.0) == 1.0);
  CHECK(g(3.0) == 1.0);
  CHECK(g(1.5) == doctest::Approx(0.5));
  for (int j = 0; j <= 4; ++j) CHECK(std::isfinite(g.derivative_bound(j)));
  CHECK(g.derivative_bound(0) <= 1.0 + 1e-12);
  CHECK(g.derivative_bound(1) == doctest::Approx(1.875).epsilon(1e-3));
}

namespace {

GluedPotential make_hs_glue(double eps, int n) {
  auto sched = make_schedule(eps, n);
  MomentumProfile model =
      (n == 2) ? profile_cp1(1, Rational(0)) : profile_cpn(n, -1);
  return assemble_glued_potential(sched, nullptr, model);
}

}  // namespace

TEST_CASE("region purity is bit exact") {
  auto g = make_hs_glue(0.02, 2);
  const auto& s = g.schedule();
  for (double z : {2.0 * s.r_eps, 3.0 * s.r_eps, 10.0 * s.r_eps})
    CHECK(g.assembled(z) == g.outer_piece(z));
  for (double z : {s.r_eps, 0.5 * s.r_eps, 0.1 * s.r_eps})
    CHECK(g.assembled(z) == g.inner_piece(z));
}

TEST_CASE("outer region with phi1: F = |z|^2 + phi1 exactly") {
  auto sched = make_schedule(0.02, 2);
  auto phi1 = [](const Jet<4>& rho) { return 0.1 * (rho * rho); };
  auto g = assemble_glued_potential(sched, phi1, profile_cp1(1, Rational(0)));
  const double z = 3.0 * sched.r_eps;
  const double rho = z * z;
  CHECK(g.assembled(z) == rho + 0.1 * rho * rho);
}

TEST_CASE("degenerate Euclidean case: phi1 = 0, phi2 = 0 gives the flat metric") {
  // a model with no correction: fabricate by zeroing both pieces directly
  auto sched = make_schedule(0.05, 3);
  GluedPotential g = make_hs_glue(0.05, 3);
  // with phi1 = 0 the outer piece is exactly rho
  CHECK(g.outer_piece(3.0 * sched.r_eps) ==
        doctest::Approx(9.0 * sched.r_eps * sched.r_eps).epsilon(1e-15));
}

TEST_CASE("positivity margin on the annulus") {
  for (double eps : {0.05, 0.02}) {
    for (int n : {2, 3}) {
      auto g = make_hs_glue(eps, n);
      CHECK(glued_positivity_margin(g, 33) > 0.0);
    }
  }
}

TEST_CASE("scalar flatness inside and deviation decreasing in the model scale") {
  for (int n : {2, 3}) {
    double prev = std::numeric_limits<double>::infinity();
    for (double eps : {0.05, 0.02, 0.01}) {
      auto g = make_hs_glue(eps, n);
      // inner pure region is an exact rescaled scalar-flat metric
      auto pot = g.as_radial_potential();
      const double z_in = 0.5 * g.schedule().r_eps;
      CHECK(std::abs(scalar_curvature_radial(pot, z_in * z_in).scalar) <= 1e-5);
      const auto dev = glued_scalar_deviation(g, 0.0, 33);
      CHECK(std::isfinite(dev.sup_physical));
      CHECK(dev.sup_model_scale < prev);
      prev = dev.sup_model_scale;
    }
  }
}

TEST_CASE("physical-scale deviation follows the documented cutoff scaling") {
  // sup |S| on the annulus grows like eps^(-2/(2n+1)): the compensated value
  // must stay within a modest band across the sweep
  for (int n : {2, 3}) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (double eps : {0.05, 0.02, 0.01}) {
      auto g = make_hs_glue(eps, n);
      const double comp = glued_scalar_deviation(g, 0.0, 33).sup_physical *
                          std::pow(eps, 2.0 / (2.0 * n + 1.0));
      lo = std::min(lo, comp);
      hi = std::max(hi, comp);
    }
    CHECK(hi / lo < 4.0);
  }
}

TEST_CASE("synthetic base sweep: phi1 = rho^2/10 deviations decrease") {
  auto phi1 = [](const Jet<4>& rho) { return 0.1 * (rho * rho); };
  auto sweep =
      deviation_sweep({0.05, 0.02, 0.01}, 2, phi1, profile_cp1(1, Rational(0)), 0.0);
  REQUIRE(sweep.rows.size() == 3);
  for (std::size_t i = 1; i < sweep.rows.size(); ++i)
    CHECK(sweep.rows[i].sup_model_scale < sweep.rows[i - 1].sup_model_scale);
  CHECK(sweep.fitted_decay_exponent > 0.0);
}

TEST_CASE("annulus correction stays O(|z|^4) with the documented schedule scaling") {
  // the sup of |correction|/|z|^4 grows like eps^(-2/(2n+1)); compensating by
  // that power must leave a stable constant
  for (int n : {2, 3}) {
    double compensated_lo = std::numeric_limits<double>::infinity();
    double compensated_hi = 0.0;
    for (double eps : {0.05, 0.02, 0.01}) {
      auto g = make_hs_glue(eps, n);
      const double c = annulus_correction_constant(g, 33);
      const double comp = c * std::pow(eps, 2.0 / (2.0 * n + 1.0));
      compensated_lo = std::min(compensated_lo, comp);
      compensated_hi = std::max(compensated_hi, comp);
    }
    CHECK(compensated_hi / compensated_lo < 4.0);
  }
}

TEST_CASE("interior biharmonic extensions") {
  SUBCASE("constants extend to constants") {
    auto sols = biharmonic_interior({{0, 1.0, 0.0}}, 2);
    CHECK(sols[0].eval(0.3) == doctest::Approx(1.0));
    CHECK(sols[0].eval(1.0) == doctest::Approx(1.0));
  }
  SUBCASE("h = 0, k = 1 at degree 0 gives (r^2 - 1)/(4n)") {
    for (int n : {2, 3}) {
      auto sols = biharmonic_interior({{0, 0.0, 1.0}}, n);
      for (double r : {0.0, 0.5, 1.0})
        CHECK(sols[0].eval(r) == doctest::Approx((r * r - 1.0) / (4.0 * n)).epsilon(1e-14));
    }
  }
  SUBCASE("degree-1 harmonic data is preserved") {
    auto sols = biharmonic_interior({{1, 1.0, 0.0}}, 2);
    CHECK(sols[0].c1 == doctest::Approx(1.0));
    CHECK(sols[0].c2 == doctest::Approx(0.0));
    CHECK(sols[0].p1 == 1);
  }
}

TEST_CASE("biharmonic solutions satisfy the boundary data and the PDE identically") {
  for (int n : {2, 3}) {
    const int N = 2 * n;
    std::vector<HarmonicMode> modes;
    for (int d = 0; d <= kDefaultHarmonicTruncation; ++d)
      modes.push_back({d, 0.3 * d + 1.0, d == 0 ? 0.0 : -0.7 * d});
    for (bool exterior : {false, true}) {
      auto sols = exterior ? biharmonic_exterior(modes, n) : biharmonic_interior(modes, n);
      for (std::size_t i = 0; i < sols.size(); ++i) {
        // boundary mismatch
        CHECK(std::abs(sols[i].eval(1.0) - modes[i].h) <= 1e-10);
        CHECK(std::abs(sols[i].laplacian(1.0, N) - modes[i].k) <= 1e-10);
        // bilaplacian vanishes as an exact integer identity per power
        for (int p : {sols[i].p1, sols[i].p2}) {
          const long once = biharmonic_laplacian_coefficient(p, sols[i].degree, N);
          const long twice = biharmonic_laplacian_coefficient(p - 2, sols[i].degree, N);
          CHECK(once * twice == 0);
        }
      }
    }
  }
}

TEST_CASE("exterior extensions decay and live in the stated span") {
  SUBCASE("n = 2 degree 0: H = r^-2 from h = 1, k = 0") {
    auto sols = biharmonic_exterior({{0, 1.0, 0.0}}, 2);
    CHECK(sols[0].p1 == -2);
    CHECK(sols[0].c1 == doctest::Approx(1.0));
    CHECK(sols[0].c2 == doctest::Approx(0.0));
    // decay order 4 - 2n = 0 admits bounded solutions; this one decays as r^-2
    for (double r : {2.0, 4.0, 8.0})
      CHECK(sols[0].eval(r) == doctest::Approx(1.0 / (r * r)).epsilon(1e-14));
  }
  SUBCASE("h = 0, k = 0 gives the zero solution") {
    auto sols = biharmonic_exterior({{3, 0.0, 0.0}}, 2);
    CHECK(sols[0].c1 == 0.0);
    CHECK(sols[0].c2 == 0.0);
  }
  SUBCASE("planted degree-1 solution r^-3 is recovered exactly") {
    // n = 2: r^(2-N-d) = r^-3 at degree 1; boundary data h = 1, k = Lap = 0
    auto sols = biharmonic_exterior({{1, 1.0, 0.0}}, 2);
    CHECK(sols[0].c1 == doctest::Approx(1.0));
    CHECK(sols[0].c2 == doctest::Approx(0.0));
    CHECK(sols[0].p1 == -3);
  }
  SUBCASE("nonzero-mean k is rejected") {
    CHECK_THROWS_AS(biharmonic_exterior({{0, 1.0, 0.5}}, 2), std::invalid_argument);
  }
}
