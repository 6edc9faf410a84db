#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "emsa/geometry.hpp"

namespace emsa::model {

using geometry::Site;
using geometry::SiteSet;

/// Stateless 64-bit mixer (splitmix64 finalizer). Chained over the key
/// material it acts as a counter-based generator: the value at a site is a
/// pure function of (seed, trial, site), so overlapping regions see
/// identical draws within a trial and workers never share state.
std::uint64_t mix64(std::uint64_t z);

/// Hash of (seed, trial, stream, site).
std::uint64_t site_hash(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream,
                        const Site& site);

/// Uniform double in [0, 1) from a 64-bit word.
double uniform01(std::uint64_t bits);

enum class DisorderFamily {
  Uniform,            // uniform(a, b); Hoelder alpha = 1, K = 1/(b-a)
  DiscretizedHoelder  // `levels` steps on [0,1], each smoothed by U^(1/alpha)
};

/// Single-site disorder law scaled by the coupling g. The effective law of
/// g*omega_x keeps its Hoelder exponent; constants and support scale with g.
struct DisorderSpec {
  DisorderFamily family = DisorderFamily::Uniform;
  double a = 0.0;
  double b = 1.0;
  double alpha = 1.0;  // DiscretizedHoelder only, in (1/2, 1]
  int levels = 8;      // DiscretizedHoelder only
  double g = 1.0;
  std::uint64_t seed_material = 0;

  void validate() const;
  double hoelder_alpha() const;
  /// Concentration constant of the unscaled law: S_mu(t) <= K t^alpha.
  double hoelder_K() const;
  /// Effective constant for the g-scaled law; requires g > 0.
  double effective_K() const;
  /// Support of the g-scaled law.
  std::pair<double, double> support() const;
};

struct Potential {
  SiteSet region;
  std::vector<double> values;  // aligned with region ordering
};

/// Value of the scaled potential at one site of one trial; the per-site
/// contract behind sample_potential.
double potential_value(const DisorderSpec& spec, std::uint64_t trial_index, const Site& site);

Potential sample_potential(const SiteSet& region, const DisorderSpec& spec,
                           std::uint64_t trial_index);

}  // namespace emsa::model
