#include "emsa/disorder.hpp"

#include <cmath>
#include <stdexcept>

namespace emsa::model {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

std::uint64_t zigzag(int v) {
  const auto w = static_cast<std::int64_t>(v);
  return static_cast<std::uint64_t>((w << 1) ^ (w >> 63));
}

}  // namespace

std::uint64_t site_hash(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream,
                        const Site& site) {
  std::uint64_t h = mix64(seed ^ 0x243F6A8885A308D3ULL);
  h = mix64(h ^ trial);
  h = mix64(h ^ stream);
  for (std::size_t i = 0; i < site.size(); ++i)
    h = mix64(h ^ zigzag(site[i]) ^ (0x9E3779B97F4A7C15ULL * (i + 1)));
  return mix64(h ^ static_cast<std::uint64_t>(site.size()));
}

double uniform01(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

void DisorderSpec::validate() const {
  if (g < 0) throw std::invalid_argument("disorder amplitude g must be nonnegative");
  switch (family) {
    case DisorderFamily::Uniform:
      if (!(a < b)) throw std::invalid_argument("uniform disorder requires a < b");
      break;
    case DisorderFamily::DiscretizedHoelder:
      if (alpha <= 0.5 || alpha > 1.0)
        throw std::invalid_argument("Hoelder exponent alpha must lie in (1/2, 1]");
      if (levels < 1) throw std::invalid_argument("at least one level required");
      break;
    default:
      throw std::invalid_argument("unsupported disorder family");
  }
}

double DisorderSpec::hoelder_alpha() const {
  return family == DisorderFamily::Uniform ? 1.0 : alpha;
}

double DisorderSpec::hoelder_K() const {
  if (family == DisorderFamily::Uniform) return 1.0 / (b - a);
  // per-cell mass 1/n with intra-cell law (n s)^alpha / n: an interval of
  // length t <= 1/n meets two cells (2 n^{alpha-1} t^alpha <= 2 t^alpha),
  // longer intervals cost at most t + 2/n <= 3 t^alpha
  return 3.0;
}

double DisorderSpec::effective_K() const {
  if (g <= 0) throw std::invalid_argument("effective Hoelder constant needs g > 0");
  return hoelder_K() * std::pow(g, -hoelder_alpha());
}

std::pair<double, double> DisorderSpec::support() const {
  const auto span = family == DisorderFamily::Uniform ? std::pair{a, b} : std::pair{0.0, 1.0};
  return {g * span.first, g * span.second};
}

double potential_value(const DisorderSpec& spec, std::uint64_t trial_index, const Site& site) {
  if (spec.g == 0) return 0.0;
  switch (spec.family) {
    case DisorderFamily::Uniform: {
      const double u = uniform01(site_hash(spec.seed_material, trial_index, 0, site));
      return spec.g * (spec.a + (spec.b - spec.a) * u);
    }
    case DisorderFamily::DiscretizedHoelder: {
      const double u1 = uniform01(site_hash(spec.seed_material, trial_index, 1, site));
      const double u2 = uniform01(site_hash(spec.seed_material, trial_index, 2, site));
      const int level = std::min(spec.levels - 1, static_cast<int>(u1 * spec.levels));
      const double smooth = std::pow(u2, 1.0 / spec.alpha);
      return spec.g * (level + smooth) / spec.levels;
    }
  }
  throw std::invalid_argument("unsupported disorder family");
}

Potential sample_potential(const SiteSet& region, const DisorderSpec& spec,
                           std::uint64_t trial_index) {
  if (region.empty()) throw std::invalid_argument("region must be nonempty");
  spec.validate();
  Potential pot;
  pot.region = region;
  pot.values.reserve(region.size());
  for (const auto& y : region.sites) pot.values.push_back(potential_value(spec, trial_index, y));
  return pot;
}

}  // namespace emsa::model
