#include "doctest.h"

#include <cmath>

#include "sfk/polynomial.hpp"

using sfk::Poly;
using sfk::RatFun;
using sfk::Rational;
using sfk::parse_rational;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("1/10") == Rational(1, 10));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK(parse_rational("0.05") == Rational(1, 20));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("polynomial algebra and gcd") {
  // (x^2 + 2x) and (x + 2) share the factor x + 2
  Poly a({Rational(0), Rational(2), Rational(1)});
  Poly b({Rational(2), Rational(1)});
  Poly g = Poly::gcd(a, b);
  CHECK(g.degree() == 1);
  // monic: x + 2
  CHECK(g.coeff(1) == Rational(1));
  CHECK(g.coeff(0) == Rational(2));

  CHECK(a.derivative() == Poly({Rational(2), Rational(2)}));
  CHECK(a.eval(Rational(3)) == Rational(15));
}

TEST_CASE("rational function reduction to lowest terms") {
  // (x^2 + 2x) / (1 + x/2) == 2x exactly
  Poly num({Rational(0), Rational(2), Rational(1)});
  Poly den({Rational(1), Rational(1, 2)});
  RatFun f(num, den);
  RatFun two_x(Poly({Rational(0), Rational(2)}));
  CHECK(f == two_x);
  CHECK(f.is_polynomial());
  CHECK(f.eval(Rational(5)) == Rational(10));
}

TEST_CASE("rational function derivative") {
  // d/dx [1/(1+x)] = -1/(1+x)^2
  RatFun f(Poly(Rational(1)), Poly({Rational(1), Rational(1)}));
  RatFun d = f.derivative();
  CHECK(d.eval(Rational(1)) == Rational(-1, 4));
  CHECK(d.eval(Rational(3)) == Rational(-1, 16));
}

TEST_CASE("laurent expansion at infinity") {
  // (1 + x/2)/(x^2) = (1/2) x^-1 + x^-2
  RatFun f(Poly({Rational(1), Rational(1, 2)}), Poly({Rational(0), Rational(0), Rational(1)}));
  int lead = 0;
  auto coeffs = f.laurent_at_infinity(4, &lead);
  CHECK(lead == -1);
  CHECK(coeffs[0] == Rational(1, 2));
  CHECK(coeffs[1] == Rational(1));
  CHECK(coeffs[2] == Rational(0));
}

TEST_CASE("primitive expansion splits log and power terms") {
  // integrand (1 + x/2)/(x^2 + 4x) = (1/4)/x + (1/4)/(x + 4) by partial
  // fractions, so the primitive is (1/4) log x + (1/4) log(x + 4) + const
  RatFun f(Poly({Rational(1), Rational(1, 2)}),
           Poly({Rational(0), Rational(4), Rational(1)}));
  auto prim = f.primitive_expansion_at_infinity(24);
  CHECK(prim.log_coeff == Rational(1, 2));  // (1/4) + (1/4) merge at infinity
  const double x = 50.0;
  const double closed = 0.25 * std::log(x) + 0.25 * std::log(x + 4.0);
  const double series = prim.log_coeff.get_d() * std::log(x) + prim.tail(x);
  CHECK(series == doctest::Approx(closed).epsilon(1e-12));

  // the linear part of a bounded-growth integrand lands in the power-1 slot
  RatFun g(Poly({Rational(1), Rational(1, 2)}), Poly({Rational(0), Rational(1)}));
  auto gp = g.primitive_expansion_at_infinity(4);
  CHECK(gp.powers.at(1) == Rational(1, 2));
  CHECK(gp.log_coeff == Rational(1));
  CHECK(gp.decaying_tail(10.0) == 0.0);
}

TEST_CASE("double snapshots evaluate like the exact path") {
  RatFun f(Poly({Rational(1), Rational(1, 2)}), Poly({Rational(0), Rational(2), Rational(1)}));
  auto d = f.to_double();
  CHECK(d.eval(3.7) == doctest::Approx(f.eval(3.7)).epsilon(1e-15));
}
