#include "doctest.h"

#include "sfk/spectral.hpp"

using namespace sfk;

TEST_CASE("spectrum basics: constants at level zero, increasing eigenvalues") {
  for (int n : {2, 3, 4, 5, 6}) {
    auto spec = cp_spectrum(n, 6);
    CHECK(spec.entries[0].eigenvalue == Rational(0));
    CHECK(spec.entries[0].multiplicity == 1);
    for (std::size_t j = 1; j < spec.entries.size(); ++j)
      CHECK(spec.entries[j].eigenvalue > spec.entries[j - 1].eigenvalue);
  }
}

TEST_CASE("first eigenvalue is calibrated to 2 exactly") {
  for (int n : {2, 3, 4, 5, 6}) CHECK(cp_spectrum(n, 1).entries[1].eigenvalue == Rational(2));
}

TEST_CASE("first-eigenspace multiplicity n^2 - 1") {
  CHECK(cp_spectrum(2, 1).entries[1].multiplicity == 3);
  CHECK(cp_spectrum(3, 1).entries[1].multiplicity == 8);
  for (int n = 2; n <= 6; ++n)
    CHECK(cp_spectrum(n, 1).entries[1].multiplicity == static_cast<long>(n) * n - 1);
}

TEST_CASE("CP^1 recovers the round-sphere multiplicities 2j + 1") {
  auto spec = cp_spectrum(2, 5);
  for (int j = 0; j <= 5; ++j) CHECK(spec.entries[j].multiplicity == 2 * j + 1);
}

TEST_CASE("kernel calibration identity is exact over the rationals") {
  for (int n = 2; n <= 6; ++n) {
    const Rational lambda1 = cp_spectrum(n, 1).entries[1].eigenvalue;
    CHECK(lichnerowicz_base_eigenvalue(lambda1) == Rational(0));
  }
  // constants are always annihilated
  CHECK(lichnerowicz_base_eigenvalue(Rational(0)) == Rational(0));
  // a generic level is not in the kernel
  const Rational lambda2 = cp_spectrum(2, 2).entries[2].eigenvalue;
  CHECK(lichnerowicz_base_eigenvalue(lambda2) != Rational(0));
}

TEST_CASE("kernel report for the Lichnerowicz operator on the base") {
  auto k2 = ker_lichnerowicz_E(2);
  CHECK(k2.dim_nonconstant == 3);
  CHECK(k2.dim_with_constants == 4);
  auto k4 = ker_lichnerowicz_E(4);
  CHECK(k4.dim_nonconstant == 15);
  CHECK_THROWS_AS(ker_lichnerowicz_E(1), std::invalid_argument);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(cp_spectrum(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(cp_spectrum(2, 0), std::invalid_argument);
}
