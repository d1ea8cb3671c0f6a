#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace sfk {

/// Truncated Taylor arithmetic in one seed variable: a Jet<N> carries the
/// value and the first N derivatives of a quantity, as Taylor coefficients
/// c[i] = f^(i)(x0)/i!. All elementary operations propagate coefficients
/// exactly (up to rounding), so chains of products, quotients, exp and log
/// yield derivatives without finite-difference noise.
template <std::size_t N>
struct Jet {
  std::array<double, N + 1> c{};

  Jet() = default;
  explicit Jet(double v) { c[0] = v; }

  /// The seed variable itself: value v, derivative 1.
  static Jet variable(double v) {
    Jet j(v);
    if constexpr (N >= 1) j.c[1] = 1.0;
    return j;
  }

  double value() const { return c[0]; }

  /// k-th derivative, i.e. k! * c[k].
  double derivative(std::size_t k) const {
    if (k > N) throw std::out_of_range("Jet::derivative: order exceeds jet size");
    double f = 1.0;
    for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
    return c[k] * f;
  }

  Jet& operator+=(const Jet& o) {
    for (std::size_t i = 0; i <= N; ++i) c[i] += o.c[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (std::size_t i = 0; i <= N; ++i) c[i] -= o.c[i];
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator-(const Jet& a) {
    Jet r;
    for (std::size_t i = 0; i <= N; ++i) r.c[i] = -a.c[i];
    return r;
  }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (std::size_t i = 0; i <= N; ++i)
      for (std::size_t j = 0; i + j <= N; ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) {
    if (b.c[0] == 0.0) throw std::domain_error("Jet division by zero value");
    Jet q;
    for (std::size_t k = 0; k <= N; ++k) {
      double s = a.c[k];
      for (std::size_t i = 0; i < k; ++i) s -= q.c[i] * b.c[k - i];
      q.c[k] = s / b.c[0];
    }
    return q;
  }

  friend Jet operator+(Jet a, double s) { a.c[0] += s; return a; }
  friend Jet operator+(double s, Jet a) { a.c[0] += s; return a; }
  friend Jet operator-(Jet a, double s) { a.c[0] -= s; return a; }
  friend Jet operator-(double s, const Jet& a) { return Jet(s) - a; }
  friend Jet operator*(Jet a, double s) {
    for (auto& x : a.c) x *= s;
    return a;
  }
  friend Jet operator*(double s, Jet a) { return a * s; }
  friend Jet operator/(Jet a, double s) {
    for (auto& x : a.c) x /= s;
    return a;
  }
  friend Jet operator/(double s, const Jet& a) { return Jet(s) / a; }
};

template <std::size_t N>
Jet<N> exp(const Jet<N>& a) {
  Jet<N> e;
  e.c[0] = std::exp(a.c[0]);
  for (std::size_t k = 1; k <= N; ++k) {
    double s = 0.0;
    for (std::size_t j = 1; j <= k; ++j) s += static_cast<double>(j) * a.c[j] * e.c[k - j];
    e.c[k] = s / static_cast<double>(k);
  }
  return e;
}

template <std::size_t N>
Jet<N> expm1(const Jet<N>& a) {
  Jet<N> e = exp(a);
  e.c[0] = std::expm1(a.c[0]);
  return e;
}

template <std::size_t N>
Jet<N> log(const Jet<N>& a) {
  if (a.c[0] <= 0.0) throw std::domain_error("Jet log of non-positive value");
  Jet<N> l;
  l.c[0] = std::log(a.c[0]);
  for (std::size_t k = 1; k <= N; ++k) {
    double s = a.c[k] * static_cast<double>(k);
    for (std::size_t j = 1; j < k; ++j)
      s -= static_cast<double>(j) * l.c[j] * a.c[k - j];
    l.c[k] = s / (static_cast<double>(k) * a.c[0]);
  }
  return l;
}

template <std::size_t N>
Jet<N> sqrt(const Jet<N>& a) {
  if (a.c[0] < 0.0) throw std::domain_error("Jet sqrt of negative value");
  Jet<N> s;
  s.c[0] = std::sqrt(a.c[0]);
  if (s.c[0] == 0.0) throw std::domain_error("Jet sqrt at zero is not differentiable");
  for (std::size_t k = 1; k <= N; ++k) {
    double acc = a.c[k];
    for (std::size_t i = 1; i < k; ++i) acc -= s.c[i] * s.c[k - i];
    s.c[k] = acc / (2.0 * s.c[0]);
  }
  return s;
}

/// Integer power by repeated multiplication (keeps rational structure exact).
template <std::size_t N>
Jet<N> powi(const Jet<N>& a, long e) {
  if (e < 0) return Jet<N>(1.0) / powi(a, -e);
  Jet<N> r(1.0), b = a;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

template <std::size_t N>
Jet<N> pow(const Jet<N>& a, double p) {
  return exp(p * log(a));
}

}  // namespace sfk
