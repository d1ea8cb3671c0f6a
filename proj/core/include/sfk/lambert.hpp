#pragma once

#include <stdexcept>

#include "sfk/jet.hpp"

namespace sfk {

class UnsupportedOrderError : public std::invalid_argument {
 public:
  explicit UnsupportedOrderError(const std::string& what) : std::invalid_argument(what) {}
};

/// Principal-branch Lambert W evaluation, carrying the argument, the value
/// and the achieved residual |w e^w - x| so callers can audit the defining
/// identity.
struct WBranchValue {
  double x = 0.0;
  double w = 0.0;
  double residual = 0.0;
};

/// W0(x) for x > 0, solved to relative residual |we^w - x|/x of a few ulp.
/// Seeded by the large-x asymptotic log x - log log x and polished by
/// Halley iteration; small arguments use the Taylor seed W ~ x(1 - x + ...).
/// Throws std::domain_error for x <= 0.
WBranchValue lambert_w0(double x);

/// order-th derivative of W0 at x > 0, orders 1 through 6. Computed by
/// solving the defining equation in truncated Taylor arithmetic, so the
/// values are exact up to rounding. Throws UnsupportedOrderError outside
/// the supported order range.
double lambert_w0_derivative(double x, int order);

/// W0 propagated through jet arithmetic (used by the derivative calculus and
/// by radius inversions that need W of a jet-valued argument).
template <std::size_t N>
Jet<N> lambert_w0_jet(const Jet<N>& x);

// --- implementation ---

template <std::size_t N>
Jet<N> lambert_w0_jet(const Jet<N>& x) {
  Jet<N> w(lambert_w0(x.value()).w);
  // Newton on w e^w = x in jet space; each sweep doubles the number of
  // converged Taylor coefficients.
  int sweeps = 2;
  for (std::size_t n = N; n > 0; n >>= 1) ++sweeps;
  for (int i = 0; i < sweeps; ++i) {
    Jet<N> ew = exp(w);
    w = w - (w * ew - x) / (ew * (w + 1.0));
  }
  return w;
}

}  // namespace sfk
