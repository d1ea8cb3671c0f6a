#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sfk {

class FitQualityError : public std::runtime_error {
 public:
  explicit FitQualityError(const std::string& what) : std::runtime_error(what) {}
};

/// Outcome of a power-law fit y ~ coefficient * x^exponent over a radius
/// window, in log-log least squares. r_squared below 0.999 means the data is
/// not a clean power law and callers should treat the fit as failed.
struct PowerFit {
  double exponent = 0.0;
  double coefficient = 0.0;
  double r_squared = 0.0;
  std::pair<double, double> window{0.0, 0.0};
};

struct LinearFit {
  std::vector<double> coefficients;
  double r_squared = 0.0;
  double residual_norm = 0.0;
};

/// Least squares y ~ sum_j c_j * basis[i][j] via column-pivoted QR.
LinearFit linear_least_squares(const std::vector<std::vector<double>>& basis,
                               const std::vector<double>& y);

/// Fits signed data to coefficient * x^exponent; all x must be positive and
/// all y nonzero with a common sign.
PowerFit loglog_power_fit(const std::vector<std::pair<double, double>>& points);

}  // namespace sfk
