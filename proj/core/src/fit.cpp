#include "sfk/fit.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace sfk {

LinearFit linear_least_squares(const std::vector<std::vector<double>>& basis,
                               const std::vector<double>& y) {
  if (basis.empty() || basis.size() != y.size())
    throw std::invalid_argument("least squares: basis rows must match sample count");
  const auto rows = static_cast<Eigen::Index>(basis.size());
  const auto cols = static_cast<Eigen::Index>(basis.front().size());
  Eigen::MatrixXd a(rows, cols);
  Eigen::VectorXd b(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(basis[i].size()) != cols)
      throw std::invalid_argument("least squares: ragged basis");
    for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = basis[i][j];
    b(i) = y[i];
  }
  Eigen::VectorXd x = a.colPivHouseholderQr().solve(b);
  Eigen::VectorXd resid = a * x - b;
  const double ss_res = resid.squaredNorm();
  const double mean = b.mean();
  double ss_tot = 0.0;
  for (Eigen::Index i = 0; i < rows; ++i) ss_tot += (b(i) - mean) * (b(i) - mean);

  LinearFit fit;
  fit.coefficients.assign(x.data(), x.data() + x.size());
  fit.residual_norm = std::sqrt(ss_res);
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

PowerFit loglog_power_fit(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) throw std::invalid_argument("power fit needs at least 3 points");
  const double sign = points.front().second >= 0.0 ? 1.0 : -1.0;
  std::vector<std::vector<double>> basis;
  std::vector<double> rhs;
  double xmin = points.front().first, xmax = points.front().first;
  for (const auto& [x, y] : points) {
    if (x <= 0.0) throw std::invalid_argument("power fit needs positive abscissae");
    if (y * sign <= 0.0)
      throw FitQualityError("power fit: data changes sign or vanishes inside the window");
    basis.push_back({std::log(x), 1.0});
    rhs.push_back(std::log(std::abs(y)));
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
  }
  LinearFit lin = linear_least_squares(basis, rhs);
  PowerFit fit;
  fit.exponent = lin.coefficients[0];
  fit.coefficient = sign * std::exp(lin.coefficients[1]);
  fit.r_squared = lin.r_squared;
  fit.window = {xmin, xmax};
  return fit;
}

}  // namespace sfk
