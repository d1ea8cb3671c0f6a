#include "sfk/spectral.hpp"

#include <stdexcept>

namespace sfk {
namespace {

mpz_class binomial(long top, long bottom) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top),
               static_cast<unsigned long>(bottom));
  return r;
}

}  // namespace

BaseSpectrum cp_spectrum(int n, int j_max) {
  if (n < 2) throw std::invalid_argument("cp_spectrum: n must be >= 2");
  if (j_max < 1) throw std::invalid_argument("cp_spectrum: j_max must be >= 1");
  const long m = n - 1;
  BaseSpectrum spec;
  spec.n = n;
  for (int j = 0; j <= j_max; ++j) {
    SpectrumEntry e;
    e.level = j;
    e.eigenvalue = Rational(2L * j * (j + m), m + 1);
    e.eigenvalue.canonicalize();
    if (j == 0) {
      e.multiplicity = 1;
    } else {
      mpz_class mult = binomial(m + j - 1, j);
      mult = mult * mult * (2 * j + m);
      mpz_class q;
      mpz_divexact_ui(q.get_mpz_t(), mult.get_mpz_t(), static_cast<unsigned long>(m));
      if (!q.fits_slong_p())
        throw std::overflow_error("cp_spectrum: multiplicity exceeds long range");
      e.multiplicity = q.get_si();
    }
    spec.entries.push_back(std::move(e));
  }
  return spec;
}

Rational lichnerowicz_base_eigenvalue(const Rational& lambda) {
  return lambda * lambda / 2 - lambda;
}

KernelInfo ker_lichnerowicz_E(int n) {
  if (n < 2) throw std::invalid_argument("ker_lichnerowicz_E: n must be >= 2");
  KernelInfo info;
  info.dim_nonconstant = static_cast<long>(n) * n - 1;
  info.dim_with_constants = static_cast<long>(n) * n;
  info.description =
      "constants plus the first Laplace eigenspace of CP^(n-1); the nonconstant "
      "summand has dimension n^2 - 1";
  return info;
}

}  // namespace sfk
