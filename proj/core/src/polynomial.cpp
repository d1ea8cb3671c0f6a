#include "sfk/polynomial.hpp"

#include <cmath>
#include <sstream>

namespace sfk {

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    mpq_class q(text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("not a number: " + text);
    mpz_class num(digits);
    mpz_class den(1);
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  return Rational(mpz_class(text));
}

Rational pow_rational(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("pow_rational: 0 to a negative power");
    return 1 / pow_rational(base, -exponent);
  }
  Rational r(1), b = base;
  long e = exponent;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

Poly::Poly(Rational constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& coeff, int power) {
  if (coeff == 0) return Poly();
  std::vector<Rational> c(power + 1, Rational(0));
  c[power] = coeff;
  return Poly(std::move(c));
}

const Rational& Poly::coeff(int i) const {
  static const Rational zero(0);
  if (i < 0 || i > degree()) return zero;
  return coeffs_[i];
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::derivative() const {
  if (degree() < 1) return Poly();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(d));
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
  return acc;
}

double Poly::eval(double x) const {
  double acc = 0.0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i].get_d();
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(c));
}

Poly operator*(const Rational& s, const Poly& a) {
  std::vector<Rational> c = a.coeffs_;
  for (auto& x : c) x *= s;
  return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly r = num;
  std::vector<Rational> q(num.degree() >= den.degree() ? num.degree() - den.degree() + 1 : 0,
                          Rational(0));
  while (!r.is_zero() && r.degree() >= den.degree()) {
    int shift = r.degree() - den.degree();
    Rational factor = r.coeffs_.back() / den.coeffs_.back();
    q[shift] = factor;
    r = r - Poly::monomial(factor, shift) * den;
  }
  return {Poly(std::move(q)), r};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  // make monic so the gcd is canonical
  Rational lead = a.coeffs_.back();
  for (auto& c : a.coeffs_) c /= lead;
  return a;
}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::divmod(num_, g).first;
    den_ = Poly::divmod(den_, g).first;
  }
  Rational lead = den_.coeffs().back();
  std::vector<Rational> n = num_.coeffs(), d = den_.coeffs();
  for (auto& c : n) c /= lead;
  for (auto& c : d) c /= lead;
  num_ = Poly(std::move(n));
  den_ = Poly(std::move(d));
}

RatFun RatFun::derivative() const {
  Poly n = num_.derivative() * den_ - num_ * den_.derivative();
  return RatFun(std::move(n), den_ * den_);
}

Rational RatFun::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d == 0) throw std::domain_error("rational function pole");
  return num_.eval(x) / d;
}

double RatFun::eval(double x) const { return num_.eval(x) / den_.eval(x); }

DRatFun RatFun::to_double() const {
  DRatFun d;
  d.num.c.reserve(num_.coeffs().size());
  for (const auto& q : num_.coeffs()) d.num.c.push_back(q.get_d());
  d.den.c.reserve(den_.coeffs().size());
  for (const auto& q : den_.coeffs()) d.den.c.push_back(q.get_d());
  if (d.den.c.empty()) d.den.c.push_back(1.0);
  return d;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFun operator-(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}
RatFun operator*(const Rational& s, const RatFun& a) { return RatFun(s * a.num_, a.den_); }
RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFun& a, const RatFun& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::vector<Rational> RatFun::laurent_at_infinity(int terms, int* lead_power) const {
  if (is_zero()) {
    if (lead_power) *lead_power = 0;
    return std::vector<Rational>(terms, Rational(0));
  }
  // substitute x = 1/u and expand the power series at u = 0
  int dn = num_.degree(), dd = den_.degree();
  std::vector<Rational> nrev(dn + 1), drev(dd + 1);
  for (int i = 0; i <= dn; ++i) nrev[i] = num_.coeff(dn - i);
  for (int i = 0; i <= dd; ++i) drev[i] = den_.coeff(dd - i);
  // series division nrev/drev, drev[0] = lead coeff of den != 0
  std::vector<Rational> s(terms, Rational(0));
  for (int k = 0; k < terms; ++k) {
    Rational acc = (k <= dn) ? nrev[k] : Rational(0);
    for (int i = 0; i < k; ++i) {
      int j = k - i;
      if (j <= dd) acc -= s[i] * drev[j];
    }
    s[k] = acc / drev[0];
  }
  if (lead_power) *lead_power = dn - dd;
  return s;
}

PrimitiveExpansion RatFun::primitive_expansion_at_infinity(int terms) const {
  int e0 = 0;
  std::vector<Rational> l = laurent_at_infinity(terms, &e0);
  if (e0 > 0) throw std::domain_error("primitive expansion requires decay or boundedness");
  PrimitiveExpansion p;
  for (int j = 0; j < static_cast<int>(l.size()); ++j) {
    int pow = e0 - j;  // coefficient of x^pow
    if (l[j] == 0) continue;
    if (pow == -1) {
      p.log_coeff += l[j];
    } else {
      p.powers[pow + 1] += l[j] / Rational(pow + 1);
    }
  }
  return p;
}

double PrimitiveExpansion::tail(double x) const {
  double acc = 0.0;
  for (const auto& [pow, coef] : powers) acc += coef.get_d() * std::pow(x, pow);
  return acc;
}

double PrimitiveExpansion::decaying_tail(double x) const {
  double acc = 0.0;
  for (const auto& [pow, coef] : powers)
    if (pow < 0) acc += coef.get_d() * std::pow(x, pow);
  return acc;
}

double PrimitiveExpansion::eval(double x) const {
  return log_coeff.get_d() * std::log(x) + tail(x) + constant;
}

double PrimitiveExpansion::tail_derivative(double x) const {
  double acc = 0.0;
  for (const auto& [pow, coef] : powers) acc += coef.get_d() * pow * std::pow(x, pow - 1);
  return acc;
}

}  // namespace sfk
