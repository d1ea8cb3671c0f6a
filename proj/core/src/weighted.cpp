#include "sfk/weighted.hpp"

#include <cmath>
#include <istream>
#include <sstream>
#include <string>

namespace sfk {

double t_coordinate(double z_sq, double lambda) {
  if (!(z_sq > 0.0)) throw std::domain_error("t_coordinate: |z|^2 must be positive");
  const double arg = lambda - std::log(z_sq);
  if (!(arg > 0.0))
    throw std::domain_error("t_coordinate: lambda - log|z|^2 must be positive");
  return std::log(arg);
}

double weighted_sup(const WeightedSampleSet& set, int order) {
  if (order < 0) throw std::invalid_argument("weighted_sup: negative order");
  double sup = 0.0;
  for (const auto& s : set.samples) {
    if (static_cast<int>(s.derivatives.size()) < order + 1) {
      std::ostringstream os;
      os << "weighted_sup: sample carries " << s.derivatives.size()
         << " derivative slots, order " << order << " requested";
      throw IncompleteDataError(os.str());
    }
    double local = 0.0;
    switch (s.region) {
      case SampleRegion::cusp: {
        const double w = std::exp(set.eta * s.coordinate);
        for (int j = 0; j <= order; ++j) local = std::max(local, w * std::abs(s.derivatives[j]));
        break;
      }
      case SampleRegion::ae: {
        // anchor the window at the dyadic shell containing the sample
        const double r_anchor = std::pow(2.0, std::floor(std::log2(s.coordinate)));
        for (int j = 0; j <= order; ++j)
          local = std::max(local, std::pow(r_anchor, j - set.delta) * std::abs(s.derivatives[j]));
        break;
      }
      case SampleRegion::annulus: {
        for (int j = 0; j <= order; ++j) local = std::max(local, std::abs(s.derivatives[j]));
        break;
      }
    }
    sup = std::max(sup, local);
  }
  return sup;
}

WeightedSampleSet read_weighted_samples_csv(std::istream& in, double eta, double delta) {
  WeightedSampleSet set;
  set.eta = eta;
  set.delta = delta;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string field;
    if (!std::getline(row, field, ',')) continue;
    WeightedSample s;
    if (field == "cusp")
      s.region = SampleRegion::cusp;
    else if (field == "ae")
      s.region = SampleRegion::ae;
    else if (field == "annulus")
      s.region = SampleRegion::annulus;
    else
      throw std::invalid_argument("weighted samples: unknown region '" + field + "'");
    if (!std::getline(row, field, ','))
      throw std::invalid_argument("weighted samples: missing coordinate");
    s.coordinate = std::stod(field);
    while (std::getline(row, field, ',')) s.derivatives.push_back(std::stod(field));
    if (s.derivatives.empty())
      throw std::invalid_argument("weighted samples: missing value column");
    set.samples.push_back(std::move(s));
  }
  return set;
}

}  // namespace sfk
