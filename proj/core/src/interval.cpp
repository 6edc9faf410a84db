#include "emsa/interval.hpp"

#include <cmath>
#include <stdexcept>

namespace emsa::spectral {

double modulating_weight(double t, const EnergyInterval& interval) {
  const double s = (t - interval.center) / interval.half_width;
  if (std::abs(s) >= 1.0) return 0.0;
  return 1.0 - s * s;
}

namespace {

double shrink_factor(double ell, double kappa) {
  if (ell <= 1.0) throw std::invalid_argument("interval map needs ell > 1");
  if (kappa <= 0.0 || kappa >= 1.0) throw std::invalid_argument("kappa must lie in (0,1)");
  const double f = 1.0 - std::pow(ell, -kappa);
  if (f <= 0.0) throw std::invalid_argument("degenerate interval map factor");
  return f;
}

}  // namespace

EnergyInterval shrink_interval(const EnergyInterval& interval, double ell, double kappa) {
  return {interval.center, interval.half_width * shrink_factor(ell, kappa)};
}

EnergyInterval expand_interval(const EnergyInterval& interval, double ell, double kappa) {
  return {interval.center, interval.half_width / shrink_factor(ell, kappa)};
}

}  // namespace emsa::spectral
