#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace sfk {

/// Raised when adaptive quadrature cannot reach the requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

struct QuadratureOptions {
  double abs_tol = 1e-13;
  double rel_tol = 1e-13;
  int max_depth = 60;
};

/// Adaptive Gauss-Kronrod 15(7) integration of f over [a, b]. Endpoints may
/// be in either order; the signed integral is returned.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt = {});

}  // namespace sfk
