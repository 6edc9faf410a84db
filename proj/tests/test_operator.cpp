#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "emsa/disorder.hpp"
#include "emsa/hamiltonian.hpp"
#include "emsa/spectral.hpp"

using namespace emsa;
using geometry::Site;
using geometry::SiteSet;

namespace {

SiteSet segment(int lo, int hi) {
  std::vector<Site> sites;
  for (int x = lo; x <= hi; ++x) sites.push_back({x});
  return SiteSet::from_unsorted(1, std::move(sites));
}

model::DisorderSpec uniform_spec(double g, std::uint64_t seed) {
  model::DisorderSpec spec;
  spec.family = model::DisorderFamily::Uniform;
  spec.a = 0.0;
  spec.b = 1.0;
  spec.g = g;
  spec.seed_material = seed;
  return spec;
}

}  // namespace

TEST_SUITE_BEGIN("operator");

TEST_CASE("potential sampling") {
  const auto region = segment(-3, 3);
  SUBCASE("zero amplitude gives the free operator") {
    const auto pot = model::sample_potential(region, uniform_spec(0.0, 9), 5);
    for (double v : pot.values) CHECK(v == 0.0);
  }
  SUBCASE("same (seed, trial, site) reproduces the value exactly") {
    const auto spec = uniform_spec(2.0, 123);
    const auto a = model::sample_potential(region, spec, 7);
    const auto b = model::sample_potential(region, spec, 7);
    CHECK(a.values == b.values);
    CHECK(model::potential_value(spec, 7, {2}) == a.values[region.index_of({2})]);
  }
  SUBCASE("values are independent of the region shape") {
    const auto spec = uniform_spec(1.0, 77);
    const auto small = model::sample_potential(segment(0, 2), spec, 3);
    const auto large = model::sample_potential(segment(-5, 8), spec, 3);
    for (int x = 0; x <= 2; ++x)
      CHECK(small.values[small.region.index_of({x})] ==
            large.values[large.region.index_of({x})]);
  }
  SUBCASE("empirical mean within three standard errors") {
    const auto spec = uniform_spec(1.0, 2025);
    const int n = 100000;
    double sum = 0.0;
    for (int trial = 0; trial < n; ++trial) sum += model::potential_value(spec, trial, {0});
    const double mean = sum / n;
    const double sigma = std::sqrt(1.0 / 12.0) / std::sqrt(static_cast<double>(n));
    CHECK(std::abs(mean - 0.5) < 3.0 * sigma);
  }
  SUBCASE("trial index changes the draw") {
    const auto spec = uniform_spec(1.0, 4);
    CHECK(model::potential_value(spec, 0, {0}) != model::potential_value(spec, 1, {0}));
  }
}

TEST_CASE("discretized Hoelder family") {
  model::DisorderSpec spec;
  spec.family = model::DisorderFamily::DiscretizedHoelder;
  spec.alpha = 0.75;
  spec.levels = 8;
  spec.g = 1.0;
  spec.seed_material = 5;
  spec.validate();
  CHECK(spec.hoelder_alpha() == 0.75);

  SUBCASE("support is the unit interval") {
    for (int trial = 0; trial < 2000; ++trial) {
      const double v = model::potential_value(spec, trial, {0});
      CHECK(v >= 0.0);
      CHECK(v < 1.0 + 1e-12);
    }
  }
  SUBCASE("empirical concentration respects S(t) <= K t^alpha") {
    // oracle: sort many draws and slide windows of width t over [0,1]
    const int n = 20000;
    std::vector<double> draws(n);
    for (int trial = 0; trial < n; ++trial) draws[trial] = model::potential_value(spec, trial, {0});
    std::sort(draws.begin(), draws.end());
    for (double t : {0.01, 0.05, 0.2}) {
      double worst = 0.0;
      for (double a = 0.0; a <= 1.0 - t; a += t / 4) {
        const auto lo = std::lower_bound(draws.begin(), draws.end(), a);
        const auto hi = std::upper_bound(draws.begin(), draws.end(), a + t);
        worst = std::max(worst, static_cast<double>(hi - lo) / n);
      }
      CHECK(worst <= spec.hoelder_K() * std::pow(t, spec.alpha) + 0.02);
    }
  }
  SUBCASE("invalid exponent rejected") {
    spec.alpha = 0.4;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  }
}

TEST_CASE("assembly") {
  SUBCASE("two-site free segment") {
    const auto region = segment(0, 1);
    const auto h =
        model::assemble(region, model::sample_potential(region, uniform_spec(0.0, 1), 0));
    CHECK(h.matrix(0, 0) == 0.0);
    CHECK(h.matrix(0, 1) == -1.0);
    CHECK(h.matrix(1, 0) == -1.0);
    CHECK(h.matrix(1, 1) == 0.0);
    const auto es = spectral::eigensystem(h);
    CHECK(es.values(0) == doctest::Approx(-1.0));
    CHECK(es.values(1) == doctest::Approx(1.0));
  }
  SUBCASE("path-graph spectrum matches the closed form") {
    for (int n : {5, 50, 200}) {
      const auto region = segment(1, n);
      const auto h =
          model::assemble(region, model::sample_potential(region, uniform_spec(0.0, 1), 0));
      const auto es = spectral::eigensystem(h);
      for (int j = 1; j <= n; ++j) {
        const double expected = -2.0 * std::cos(j * M_PI / (n + 1.0));
        CHECK(std::abs(es.values(j - 1) - expected) < 1e-10);
      }
    }
  }
  SUBCASE("single site is the 1x1 potential") {
    const auto region = segment(4, 4);
    model::Potential pot{region, {3.25}};
    const auto h = model::assemble(region, pot);
    CHECK(h.matrix(0, 0) == 3.25);
    CHECK(h.matrix.rows() == 1);
  }
  SUBCASE("region/potential mismatch rejected") {
    model::Potential pot{segment(0, 1), {0.0, 0.0}};
    CHECK_THROWS_AS(model::assemble(segment(0, 2), pot), std::invalid_argument);
  }
  SUBCASE("symmetry, diagonal and neighbor counts") {
    const auto region = geometry::box_sites({{0.0, 0.0}, 4.0, 2});
    const auto spec = uniform_spec(3.0, 11);
    const auto pot = model::sample_potential(region, spec, 2);
    const auto h = model::assemble(region, pot);
    CHECK((h.matrix - h.matrix.transpose()).cwiseAbs().maxCoeff() == 0.0);
    for (std::size_t i = 0; i < region.size(); ++i) {
      CHECK(h.matrix(i, i) == pot.values[i]);
      int neighbors = 0;
      Site y = region.sites[i];
      for (int axis = 0; axis < 2; ++axis)
        for (int step : {-1, 1}) {
          y[axis] += step;
          if (region.contains(y)) ++neighbors;
          y[axis] -= step;
        }
      CHECK(h.matrix.row(i).cwiseAbs().sum() - std::abs(h.matrix(i, i)) ==
            doctest::Approx(neighbors));
    }
  }
}

TEST_CASE("restriction") {
  const auto region = segment(0, 5);
  const auto spec = uniform_spec(2.0, 31);
  const auto pot = model::sample_potential(region, spec, 0);
  const auto h = model::assemble(region, pot);
  SUBCASE("restricting to the full region is the identity") {
    const auto sub = model::restrict_to(h, region);
    CHECK((sub.matrix - h.matrix).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("restricting to one site keeps its potential") {
    const auto sub = model::restrict_to(h, segment(0, 0));
    CHECK(sub.matrix(0, 0) == pot.values[0]);
  }
  SUBCASE("restriction equals assembly from scratch") {
    const auto sub_sites = segment(1, 3);
    const auto direct = model::assemble(sub_sites, model::sample_potential(sub_sites, spec, 0));
    const auto restricted = model::restrict_to(h, sub_sites);
    CHECK((direct.matrix - restricted.matrix).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("non-subset rejected") {
    CHECK_THROWS_AS(model::restrict_to(h, segment(4, 9)), std::invalid_argument);
  }
}

TEST_CASE("boundary coupling") {
  SUBCASE("two sites split") {
    const auto gamma = model::coupling_gamma(segment(0, 0), segment(0, 1));
    CHECK(gamma.coeff(0, 1) == -1.0);
    CHECK(gamma.coeff(1, 0) == -1.0);
    CHECK(gamma.coeff(0, 0) == 0.0);
    CHECK(gamma.coeff(1, 1) == 0.0);
  }
  SUBCASE("phi equal to theta gives zero coupling") {
    const auto gamma = model::coupling_gamma(segment(0, 4), segment(0, 4));
    CHECK(gamma.nonZeros() == 0);
  }
  SUBCASE("decomposition identity on random 2d splits") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 10; ++rep) {
      const auto theta = geometry::box_sites({{0.0, 0.0}, 5.0, 2});
      std::vector<Site> phi_sites;
      for (const auto& y : theta.sites)
        if (rng() % 2) phi_sites.push_back(y);
      const auto phi = SiteSet::from_unsorted(2, phi_sites);
      const auto spec = uniform_spec(1.5, 100 + rep);
      const auto h = model::assemble(theta, model::sample_potential(theta, spec, rep));
      const Eigen::MatrixXd decoupled = model::decoupled_hamiltonian(h, phi);
      const Eigen::MatrixXd gamma = model::coupling_gamma(phi, theta);
      CHECK((h.matrix - (decoupled + gamma)).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("almost-sure spectrum") {
  SUBCASE("d=1 uniform unit coupling") {
    const auto spectrum = model::almost_sure_spectrum(uniform_spec(1.0, 0), 1);
    REQUIRE(spectrum.size() == 1);
    CHECK(spectrum[0].first == doctest::Approx(-2.0));
    CHECK(spectrum[0].second == doctest::Approx(3.0));
  }
  SUBCASE("zero coupling collapses to the free band") {
    const auto spectrum = model::almost_sure_spectrum(uniform_spec(0.0, 0), 2);
    CHECK(spectrum[0].first == doctest::Approx(-4.0));
    CHECK(spectrum[0].second == doctest::Approx(4.0));
  }
  SUBCASE("d=2 with doubled coupling") {
    const auto spectrum = model::almost_sure_spectrum(uniform_spec(2.0, 0), 2);
    CHECK(spectrum[0].first == doctest::Approx(-4.0));
    CHECK(spectrum[0].second == doctest::Approx(6.0));
  }
}

TEST_SUITE_END();
