#include "doctest.h"

#include <cmath>

#include "sfk/jet.hpp"

using sfk::Jet;

TEST_CASE("jet arithmetic reproduces hand derivatives of a rational function") {
  // f(x) = (x^2 + 1) / (x + 2) at x = 1.5
  const double x = 1.5;
  auto j = Jet<4>::variable(x);
  auto f = (j * j + 1.0) / (j + 2.0);

  // independent evaluation by central differences at loose tolerance
  auto fval = [](double t) { return (t * t + 1.0) / (t + 2.0); };
  const double h = 1e-5;
  const double fd1 = (fval(x + h) - fval(x - h)) / (2 * h);
  const double fd2 = (fval(x + h) - 2 * fval(x) + fval(x - h)) / (h * h);

  CHECK(f.value() == doctest::Approx(fval(x)).epsilon(1e-14));
  CHECK(f.derivative(1) == doctest::Approx(fd1).epsilon(1e-8));
  CHECK(f.derivative(2) == doctest::Approx(fd2).epsilon(1e-5));
}

TEST_CASE("jet exp/log/sqrt against closed forms") {
  const double x = 0.8;
  auto j = Jet<4>::variable(x);

  auto e = exp(j);
  for (int k = 0; k <= 4; ++k)
    CHECK(e.derivative(k) == doctest::Approx(std::exp(x)).epsilon(1e-14));

  auto l = log(j);
  CHECK(l.derivative(1) == doctest::Approx(1.0 / x).epsilon(1e-14));
  CHECK(l.derivative(2) == doctest::Approx(-1.0 / (x * x)).epsilon(1e-14));
  CHECK(l.derivative(3) == doctest::Approx(2.0 / (x * x * x)).epsilon(1e-14));
  CHECK(l.derivative(4) == doctest::Approx(-6.0 / (x * x * x * x)).epsilon(1e-14));

  auto s = sqrt(j);
  CHECK(s.derivative(1) == doctest::Approx(0.5 / std::sqrt(x)).epsilon(1e-14));
  CHECK(s.derivative(2) == doctest::Approx(-0.25 * std::pow(x, -1.5)).epsilon(1e-14));
}

TEST_CASE("jet composition chain rule") {
  // g(x) = log(1 + x^2), g'(x) = 2x/(1+x^2)
  const double x = 2.0;
  auto j = Jet<3>::variable(x);
  auto g = log(1.0 + j * j);
  CHECK(g.derivative(1) == doctest::Approx(2 * x / (1 + x * x)).epsilon(1e-14));
  // g'' = (2 - 2x^2)/(1+x^2)^2
  CHECK(g.derivative(2) ==
        doctest::Approx((2 - 2 * x * x) / std::pow(1 + x * x, 2)).epsilon(1e-14));
}

TEST_CASE("integer powers stay exact") {
  auto j = Jet<4>::variable(3.0);
  auto p = powi(j, 4);
  CHECK(p.value() == 81.0);
  CHECK(p.derivative(1) == 4.0 * 27.0);
  CHECK(p.derivative(4) == 24.0);
  auto inv = powi(j, -2);
  CHECK(inv.value() == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
}

TEST_CASE("jet domain errors") {
  CHECK_THROWS_AS((void)log(Jet<2>(-1.0)), std::domain_error);
  CHECK_THROWS_AS((void)(Jet<2>(1.0) / Jet<2>(0.0)), std::domain_error);
}
