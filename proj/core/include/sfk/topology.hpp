#pragma once

#include "sfk/rational.hpp"

namespace sfk {

/// Intersection data of the glued Kahler class pi*[omega_X] - eps^2 [E]:
/// c1_dot = c1(X) cup [omega_X]^(n-1), vol = [omega_X]^n. All exact.
struct KahlerClassData {
  int n = 2;
  Rational c1_dot{0};
  Rational vol{1};
  Rational epsilon{0};
};

/// Average scalar curvature of the solution class,
///   n (c1_dot - n eps^(2n-2)) / (vol - eps^(2n)),
/// exact over the rationals. Throws std::domain_error when vol - eps^(2n)
/// is not positive.
Rational avg_scalar_solution(const KahlerClassData& d);

/// Average scalar curvature of the restriction to the divisor: n(n-1)/eps^2.
Rational avg_scalar_divisor(int n, const Rational& epsilon);

/// Cusp coefficient a = 1/(s_divisor - s_total); throws std::domain_error at
/// the pole s_divisor = s_total.
Rational cusp_coefficient_a(const Rational& s_divisor, const Rational& s_total);

}  // namespace sfk
