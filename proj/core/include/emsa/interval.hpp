#pragma once

namespace emsa::spectral {

/// Open interval (E - A, E + A); membership is strict.
struct EnergyInterval {
  double center = 0.0;
  double half_width = 0.0;

  double lo() const { return center - half_width; }
  double hi() const { return center + half_width; }
  bool contains(double t) const { return t > lo() && t < hi(); }
};

/// Concave weight 1 - ((t-E)/A)^2 on the interval, zero outside. It scales
/// the required localization rate toward zero at the interval edges.
double modulating_weight(double t, const EnergyInterval& interval);

/// Interval with half-width A (1 - ell^{-kappa}); requires ell > 1,
/// kappa in (0,1).
EnergyInterval shrink_interval(const EnergyInterval& interval, double ell, double kappa);
/// Interval with half-width A / (1 - ell^{-kappa}); exact inverse of shrink.
EnergyInterval expand_interval(const EnergyInterval& interval, double ell, double kappa);

}  // namespace emsa::spectral
