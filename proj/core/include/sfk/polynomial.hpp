#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "sfk/rational.hpp"

namespace sfk {

/// Dense univariate polynomial over exact rationals, coefficient i is the
/// coefficient of x^i. Trailing zeros are trimmed; the zero polynomial has
/// an empty coefficient vector and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational constant);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly monomial(const Rational& coeff, int power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Poly derivative() const;
  Rational eval(const Rational& x) const;
  double eval(double x) const;

  /// Evaluates in any ring with double coefficients (Jet, double, ...).
  template <class T>
  T eval_as(const T& x) const {
    T acc(0.0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + T(coeffs_[i].get_d());
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Euclidean division: returns {quotient, remainder}.
  static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
  static Poly gcd(Poly a, Poly b);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Double-coefficient snapshots for hot evaluation loops (quadrature, jets).
struct DPoly {
  std::vector<double> c;

  double eval(double x) const {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  template <class T>
  T eval_as(const T& x) const {
    T acc(0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }
};

struct DRatFun {
  DPoly num, den;

  double eval(double x) const { return num.eval(x) / den.eval(x); }
  template <class T>
  T eval_as(const T& x) const {
    return num.eval_as(x) / den.eval_as(x);
  }
};

/// A Laurent-type primitive: log_coeff * log(x) plus sum of c_p x^p over
/// integer powers p (p may be negative), plus a floating additive constant
/// determined numerically. Used for the exact asymptotic tails of r(tau)
/// and f(tau).
struct PrimitiveExpansion {
  Rational log_coeff{0};
  std::map<int, Rational> powers;  // power -> coefficient, excludes p == 0
  double constant = 0.0;

  /// Sum of the power terms only (no log, no constant).
  double tail(double x) const;
  /// Sum of the strictly decaying power terms (negative exponents only).
  double decaying_tail(double x) const;
  /// Full value log_coeff*log(x) + tail + constant.
  double eval(double x) const;
  double tail_derivative(double x) const;
};

/// Quotient of two polynomials kept in lowest terms with monic denominator.
class RatFun {
 public:
  RatFun() : num_(), den_(Rational(1)) {}
  RatFun(Poly num, Poly den);
  explicit RatFun(Poly num) : num_(std::move(num)), den_(Rational(1)) {}

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// True when the reduced denominator is a (nonzero) constant.
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFun derivative() const;
  Rational eval(const Rational& x) const;
  double eval(double x) const;
  DRatFun to_double() const;

  template <class T>
  T eval_as(const T& x) const {
    return num_.eval_as(x) / den_.eval_as(x);
  }

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const Rational& s, const RatFun& a);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  friend bool operator==(const RatFun& a, const RatFun& b);

  /// Laurent expansion at x = +infinity: returns coefficients l_j of x^(e0-j)
  /// for j = 0..terms-1, where e0 = deg(num) - deg(den).
  std::vector<Rational> laurent_at_infinity(int terms, int* lead_power) const;

  /// Termwise primitive of the Laurent expansion at infinity, valid when the
  /// expansion has no positive powers beyond x^1... i.e. this function grows
  /// at most linearly. The additive constant is left at zero.
  PrimitiveExpansion primitive_expansion_at_infinity(int terms) const;

 private:
  void normalize();
  Poly num_, den_;
};

}  // namespace sfk
