#include "doctest.h"

#include <cmath>
#include <sstream>

#include "sfk/weighted.hpp"

using namespace sfk;

TEST_CASE("t coordinate definition and limits") {
  const double lambda = kDefaultCuspLambda;
  CHECK(t_coordinate(std::exp(lambda - std::exp(1.0)), lambda) == doctest::Approx(1.0));
  CHECK(t_coordinate(std::exp(lambda - 1.0), lambda) == doctest::Approx(0.0));
  // strictly decreasing, to +inf as z_sq -> 0
  double prev = t_coordinate(1e-2, lambda);
  for (double z = 1e-4; z >= 1e-100; z *= 1e-12) {
    const double t = t_coordinate(z, lambda);
    CHECK(t > prev);
    prev = t;
  }
  CHECK(prev > 5.0);
  CHECK_THROWS_AS(t_coordinate(std::exp(lambda + 1.0), lambda), std::domain_error);
  CHECK_THROWS_AS(t_coordinate(-1.0, lambda), std::domain_error);
}

namespace {

WeightedSampleSet constant_one(double eta, double delta) {
  WeightedSampleSet set;
  set.eta = eta;
  set.delta = delta;
  for (double t = 1.0; t <= 5.0; t += 1.0)
    set.samples.push_back({SampleRegion::cusp, t, {1.0, 0.0}});
  for (double r = 1.0; r <= 64.0; r *= 2.0)
    set.samples.push_back({SampleRegion::ae, r, {1.0, 0.0}});
  set.samples.push_back({SampleRegion::annulus, 1.0, {1.0, 0.0}});
  return set;
}

}  // namespace

TEST_CASE("unweighted norm of the constant function is 1") {
  CHECK(weighted_sup(constant_one(0.0, 0.0), 0) == doctest::Approx(1.0));
}

TEST_CASE("exact cancellation: f = e^-t with eta = 1") {
  WeightedSampleSet set;
  set.eta = 1.0;
  for (double t = 1.0; t <= 30.0; t += 3.0)
    set.samples.push_back({SampleRegion::cusp, t, {std::exp(-t)}});
  CHECK(weighted_sup(set, 0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("AE homogeneity: f = r^delta0 has dyadic window norms constant in r") {
  const double delta0 = 1.5;
  WeightedSampleSet set;
  set.delta = delta0;
  // sample exactly at dyadic anchors so the window norm is r^(delta0-delta)
  for (double r = 1.0; r <= 1024.0; r *= 2.0)
    set.samples.push_back({SampleRegion::ae, r, {std::pow(r, delta0)}});
  CHECK(weighted_sup(set, 0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("cusp weight monotonicity: finite iff eta <= planted decay rate") {
  for (double a : {0.5, 1.0, 2.0}) {
    auto norm_at = [&](double eta) {
      WeightedSampleSet set;
      set.eta = eta;
      for (double t = 1.0; t <= 60.0; t += 1.0)
        set.samples.push_back({SampleRegion::cusp, t, {std::exp(-a * t)}});
      return weighted_sup(set, 0);
    };
    // eta below the decay rate: the sup is reached at the shallow end
    CHECK(norm_at(a - 0.25) <= std::exp(-(0.25) * 1.0) + 1e-12);
    // eta above: the deepest sample dominates (finite-range proxy of blow-up)
    CHECK(norm_at(a + 0.25) == doctest::Approx(std::exp(0.25 * 60.0)).epsilon(1e-9));
  }
}

TEST_CASE("AE finiteness proxy: window norms non-increasing iff p <= delta") {
  auto window_norms = [](double p, double delta) {
    std::vector<double> norms;
    for (double r = 1.0; r <= 1024.0; r *= 2.0)
      norms.push_back(std::pow(r, -delta) * std::pow(r, p));
    return norms;
  };
  auto non_increasing = [](const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i] > v[i - 1] * (1.0 + 1e-12)) return false;
    return true;
  };
  CHECK(non_increasing(window_norms(1.0, 1.5)));
  CHECK(non_increasing(window_norms(1.5, 1.5)));
  CHECK_FALSE(non_increasing(window_norms(2.0, 1.5)));
}

TEST_CASE("larger eta demands stronger decay at the cusp") {
  // with f = e^-t fixed, the norm grows with eta: the weight convention points
  // into the cusp
  WeightedSampleSet set;
  for (double t = 1.0; t <= 20.0; t += 1.0)
    set.samples.push_back({SampleRegion::cusp, t, {std::exp(-0.5 * t)}});
  set.eta = 0.25;
  const double lo = weighted_sup(set, 0);
  set.eta = 0.75;
  const double hi = weighted_sup(set, 0);
  CHECK(hi > lo);
}

TEST_CASE("derivative slots are enforced") {
  WeightedSampleSet set;
  set.samples.push_back({SampleRegion::cusp, 1.0, {1.0}});
  CHECK_THROWS_AS(weighted_sup(set, 2), IncompleteDataError);
}

TEST_CASE("csv ingestion") {
  std::istringstream in(
      "# region,coordinate,value,d1\n"
      "cusp,2.0,0.5,0.125\n"
      "ae,8.0,3.0,0.25\n"
      "annulus,1.5,2.0,0.0\n");
  auto set = read_weighted_samples_csv(in, 1.0, 0.5);
  CHECK(set.samples.size() == 3);
  CHECK(set.samples[0].region == SampleRegion::cusp);
  CHECK(set.samples[1].derivatives.size() == 2);
  const double expected =
      std::max({std::exp(2.0) * 0.5, std::pow(8.0, -0.5) * 3.0, std::pow(8.0, 0.5) * 0.25, 2.0});
  CHECK(weighted_sup(set, 1) == doctest::Approx(expected));

  std::istringstream bad("nowhere,1.0,2.0\n");
  CHECK_THROWS_AS(read_weighted_samples_csv(bad, 0, 0), std::invalid_argument);
}
