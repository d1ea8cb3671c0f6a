#include "sfk/lambert.hpp"

#include <cmath>
#include <limits>

namespace sfk {
namespace {

double initial_guess(double x) {
  if (x < 1e-3) {
    // Taylor series at 0: x - x^2 + 3x^3/2 - 8x^4/3
    return x * (1.0 + x * (-1.0 + x * (1.5 - x * (8.0 / 3.0))));
  }
  if (x <= std::exp(1.0)) {
    // crude rational seed, refined by Halley below
    return 0.665 * (1.0 + 0.0195 * std::log(x + 1.0)) * std::log(x + 1.0);
  }
  const double l = std::log(x);
  const double ll = std::log(l);
  return l - ll + ll / l;
}

long double residual_ld(long double w, long double x) { return w * std::exp(w) - x; }

}  // namespace

WBranchValue lambert_w0(double x) {
  if (!(x > 0.0)) throw std::domain_error("lambert_w0: argument must be positive");
  if (!std::isfinite(x)) throw std::domain_error("lambert_w0: argument must be finite");

  double w = initial_guess(x);
  // Halley iteration on f(w) = w e^w - x, written with e^{-w} so large
  // arguments never overflow.
  for (int i = 0; i < 60; ++i) {
    const double e = std::exp(-w);
    const double f = w - x * e;
    const double wp1 = w + 1.0;
    const double step = f / (wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::abs(step) <= 2.0 * std::numeric_limits<double>::epsilon() * std::abs(w)) break;
  }
  // one last-ulp Newton polish in extended precision
  {
    const long double wl = w;
    const long double f = residual_ld(wl, x);
    const long double d = std::exp(wl) * (wl + 1.0L);
    w = static_cast<double>(wl - f / d);
  }
  WBranchValue out;
  out.x = x;
  out.w = w;
  out.residual = static_cast<double>(std::abs(residual_ld(w, x)));
  return out;
}

double lambert_w0_derivative(double x, int order) {
  if (!(x > 0.0)) throw std::domain_error("lambert_w0_derivative: argument must be positive");
  if (order < 1 || order > 6)
    throw UnsupportedOrderError("lambert_w0_derivative: order must be in [1, 6], got " +
                                std::to_string(order));
  Jet<6> w = lambert_w0_jet(Jet<6>::variable(x));
  return w.derivative(static_cast<std::size_t>(order));
}

}  // namespace sfk
