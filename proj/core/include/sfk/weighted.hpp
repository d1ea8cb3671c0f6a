#pragma once

#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace sfk {

class IncompleteDataError : public std::runtime_error {
 public:
  explicit IncompleteDataError(const std::string& what) : std::runtime_error(what) {}
};

/// Default constant in the logarithmic cusp coordinate t = log(lambda - log|z|^2);
/// the constant only needs to be large enough for t to be defined near the
/// divisor, and this choice is recorded in all outputs.
inline constexpr double kDefaultCuspLambda = 2.0;

/// t = log(lambda - log z_sq); strictly decreasing in z_sq, +inf as z_sq -> 0.
double t_coordinate(double z_sq, double lambda);

enum class SampleRegion { cusp, annulus, ae };

/// One sampled point carrying the function value and derivative magnitudes
/// up to some order. Cusp samples use the t coordinate, AE samples the radius.
struct WeightedSample {
  SampleRegion region = SampleRegion::annulus;
  double coordinate = 0.0;
  std::vector<double> derivatives;  // derivatives[j] = |d^j f| at the point
};

struct WeightedSampleSet {
  std::vector<WeightedSample> samples;
  double eta = 0.0;    // cusp weight
  double delta = 0.0;  // AE weight
};

/// Doubly weighted sup of derivatives up to `order`: e^(eta t) |d^j f| over
/// cusp samples, dyadic-window norms r^(j - delta) |d^j f| over AE samples,
/// plain sup over the compact middle. Throws IncompleteDataError when a
/// sample is missing the requested derivatives.
double weighted_sup(const WeightedSampleSet& set, int order);

/// Reads rows "region,coordinate,value[,d1,...,dk]".
WeightedSampleSet read_weighted_samples_csv(std::istream& in, double eta, double delta);

}  // namespace sfk
