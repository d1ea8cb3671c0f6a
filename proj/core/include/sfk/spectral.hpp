#pragma once

#include <string>
#include <vector>

#include "sfk/rational.hpp"

namespace sfk {

/// One Laplacian eigenvalue level on CP^(n-1) with its multiplicity, in the
/// normalization calibrated so the first nonzero eigenvalue is exactly 2 and
/// the first eigenspace lies in ker(1/2 Delta^2 + Delta).
struct SpectrumEntry {
  int level = 0;
  Rational eigenvalue{0};
  long multiplicity = 0;
};

struct BaseSpectrum {
  int n = 2;  // complex dimension of the ambient C^n; the base is CP^(n-1)
  std::vector<SpectrumEntry> entries;
};

/// Closed-form spectrum: eigenvalue_j = 2 j (j + m) / (m + 1) with m = n - 1,
/// multiplicity (2j + m)/m * C(m + j - 1, j)^2.
BaseSpectrum cp_spectrum(int n, int j_max);

/// Lichnerowicz eigenvalue (1/2) lambda^2 - lambda on a Laplace eigenspace.
Rational lichnerowicz_base_eigenvalue(const Rational& lambda);

struct KernelInfo {
  long dim_nonconstant = 0;    // n^2 - 1, the first eigenspace
  long dim_with_constants = 0; // n^2, including the constants summand
  std::string description;
};

KernelInfo ker_lichnerowicz_E(int n);

}  // namespace sfk
