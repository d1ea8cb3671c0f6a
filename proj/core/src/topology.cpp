#include "sfk/topology.hpp"

#include <stdexcept>

namespace sfk {

Rational avg_scalar_solution(const KahlerClassData& d) {
  if (d.n < 2) throw std::invalid_argument("avg_scalar_solution: n must be >= 2");
  if (d.vol <= 0) throw std::domain_error("avg_scalar_solution: volume must be positive");
  const Rational eps_2n = pow_rational(d.epsilon, 2L * d.n);
  const Rational denom = d.vol - eps_2n;
  if (denom <= 0)
    throw std::domain_error("avg_scalar_solution: inadmissible epsilon, vol - eps^(2n) <= 0");
  const Rational eps_2n_2 = pow_rational(d.epsilon, 2L * d.n - 2);
  return Rational(d.n) * (d.c1_dot - Rational(d.n) * eps_2n_2) / denom;
}

Rational avg_scalar_divisor(int n, const Rational& epsilon) {
  if (n < 1) throw std::invalid_argument("avg_scalar_divisor: n must be >= 1");
  if (epsilon == 0) throw std::domain_error("avg_scalar_divisor: epsilon must be nonzero");
  return Rational(static_cast<long>(n) * (n - 1)) / (epsilon * epsilon);
}

Rational cusp_coefficient_a(const Rational& s_divisor, const Rational& s_total) {
  if (s_divisor == s_total)
    throw std::domain_error("cusp_coefficient_a: pole, average curvatures coincide");
  return Rational(1) / (s_divisor - s_total);
}

}  // namespace sfk
