#include "emsa/calculus.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace emsa::calculus {

namespace {
constexpr double kBoundSlack = 1e-9;
constexpr double kSingularGap = 1e-14;
constexpr double kExcludeGap = 1e-12;  // near-singular pairs are counted, not judged
}  // namespace

std::string bound_id_name(BoundId id) {
  switch (id) {
    case BoundId::CT_3_7: return "CT-3.7";
    case BoundId::CT_3_9: return "CT-3.9";
    case BoundId::Heat_3_20: return "heat-3.20";
    case BoundId::Green_6_2: return "green-6.2";
    case BoundId::Green_6_20: return "green-6.20";
    case BoundId::Split_6_9: return "split-6.9";
  }
  return "unknown";
}

bool BoundReport::all_pass() const {
  if (!hypotheses_ok) return false;
  for (const auto& p : pairs)
    if (!p.pass) return false;
  return true;
}

std::size_t BoundReport::failures() const {
  std::size_t n = 0;
  for (const auto& p : pairs)
    if (!p.pass) ++n;
  return n;
}

Eigen::MatrixXd apply_spectral_function(const Eigensystem& es,
                                        const std::function<double(double)>& f) {
  Eigen::VectorXd diag(es.size());
  for (int k = 0; k < es.size(); ++k) {
    const double value = f(es.values(k));
    if (!std::isfinite(value))
      throw std::invalid_argument("spectral function undefined at an eigenvalue");
    diag(k) = value;
  }
  return es.vectors * diag.asDiagonal() * es.vectors.transpose();
}

double entire_kernel(double z, double t, double lambda) {
  const double u = z - lambda;
  if (u == 0.0) return 2.0 * t * lambda;
  return -std::expm1(-t * u * (z + lambda)) / u;
}

Eigen::MatrixXd f_t_lambda(const Eigensystem& es, double t, double lambda, double E_shift) {
  if (t <= 0) throw std::invalid_argument("kernel time t must be positive");
  return apply_spectral_function(
      es, [&](double z) { return entire_kernel(z - E_shift, t, lambda - E_shift); });
}

CombesThomasReport check_combes_thomas(const Eigensystem& es, double lambda, double E_shift,
                                       const EnergyInterval& interval, double m) {
  const double A = interval.half_width;
  const int d = es.region.dim;
  const double cap = 0.5 * std::log1p(A / (4.0 * d));
  if (!(m > 0) || m > cap * (1.0 + 1e-12))
    throw std::invalid_argument("rate m must satisfy 0 < m <= (1/2) log(1 + A/4d)");
  if (!interval.contains(lambda)) throw std::invalid_argument("lambda must lie in the interval");

  CombesThomasReport report;
  report.modulated.id = BoundId::CT_3_9;
  report.eta_form.id = BoundId::CT_3_7;

  const double weight = spectral::modulating_weight(lambda, interval);
  const double shifted = lambda - E_shift;
  const int n = es.size();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const double dist = geometry::euclid_dist(es.region.sites[x], es.region.sites[y]);
      const double t = m * dist / (A * A);
      double entry = 0.0;
      for (int k = 0; k < n; ++k)
        entry += entire_kernel(es.values(k) - E_shift, t, shifted) * es.vectors(x, k) *
                 es.vectors(y, k);
      entry = std::abs(entry);

      BoundPair modulated{x, y, entry, 70.0 / A * std::exp(-m * weight * dist), false};
      modulated.pass = modulated.computed <= modulated.bound * (1.0 + kBoundSlack);
      report.modulated.pairs.push_back(modulated);

      // eta-free form evaluated at eta = A
      const double scale = A * A + shifted * shifted;
      BoundPair eta{x, y, entry,
                    70.0 / std::sqrt(scale) * std::exp(t * scale) *
                        std::exp(-std::log1p(A / (4.0 * d)) * dist),
                    false};
      eta.pass = eta.computed <= eta.bound * (1.0 + kBoundSlack);
      report.eta_form.pairs.push_back(eta);
    }
  }
  return report;
}

BoundReport check_heat_tail(const Eigensystem& es, double t, double lambda,
                            const EnergyInterval& interval) {
  if (t <= 0) throw std::invalid_argument("kernel time t must be positive");
  if (!interval.contains(lambda)) throw std::invalid_argument("lambda must lie in the interval");
  const double E = interval.center, A = interval.half_width;
  const double shifted = lambda - E;

  double norm = 0.0;
  for (int k = 0; k < es.size(); ++k) {
    if (interval.contains(es.values(k))) continue;
    const double mu = es.values(k) - E;
    norm = std::max(norm, std::exp(-t * (mu * mu - shifted * shifted)));
  }
  BoundReport report;
  report.id = BoundId::Heat_3_20;
  BoundPair pair{0, 0, norm, std::exp(-t * A * A * spectral::modulating_weight(lambda, interval)),
                 false};
  pair.pass = pair.computed <= pair.bound * (1.0 + kBoundSlack);
  report.pairs.push_back(pair);
  return report;
}

GreenResult green(const Eigensystem& es, double lambda) {
  double min_gap = std::numeric_limits<double>::infinity();
  for (int k = 0; k < es.size(); ++k) min_gap = std::min(min_gap, std::abs(es.values(k) - lambda));
  if (min_gap <= kSingularGap)
    throw std::invalid_argument("resolvent is singular: lambda lies in the spectrum");
  GreenResult out;
  out.min_gap = min_gap;
  out.condition = 1.0 / min_gap;
  out.matrix = apply_spectral_function(es, [&](double z) { return 1.0 / (z - lambda); });
  return out;
}

bool check_regular(const Eigensystem& es, double E_energy, double m, double L) {
  const GreenResult g = green(es, E_energy);
  const double cutoff = L / 100.0;
  const int n = es.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const int dist = geometry::sup_dist(es.region.sites[x], es.region.sites[y]);
      if (dist < cutoff) continue;
      if (std::abs(g.matrix(x, y)) > std::exp(-m * dist) * (1.0 + kBoundSlack)) return false;
    }
  }
  return true;
}

GreenDecayReport check_green_decay(const Eigensystem& es, const EnergyInterval& I, double m,
                                   double lambda, double beta, double L, double kappa,
                                   const LocalizationVerdict* verdict, double c) {
  GreenDecayReport report;
  report.pairs.id = BoundId::Green_6_20;

  const EnergyInterval shrunk = spectral::shrink_interval(I, L, kappa);
  if (!shrunk.contains(lambda)) {
    report.hypothesis_failure = "lambda outside the L-shrunk interval";
    report.pairs.hypotheses_ok = false;
    return report;
  }
  double min_gap = std::numeric_limits<double>::infinity();
  for (int k = 0; k < es.size(); ++k) min_gap = std::min(min_gap, std::abs(es.values(k) - lambda));
  if (min_gap < std::exp(-std::pow(L, beta))) {
    report.hypothesis_failure = "spectral gap below e^{-L^beta}";
    report.pairs.hypotheses_ok = false;
    return report;
  }
  if (verdict != nullptr && !verdict->overall) {
    report.hypothesis_failure = "box is not localizing";
    report.pairs.hypotheses_ok = false;
    return report;
  }
  report.hypotheses_ok = true;

  const GreenResult g = green(es, lambda);
  const double rate = c * m * spectral::modulating_weight(lambda, I);
  const double cutoff = L / 100.0;
  const int n = es.size();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const int dist = geometry::sup_dist(es.region.sites[x], es.region.sites[y]);
      if (dist < cutoff) continue;
      if (g.min_gap < kExcludeGap) {
        ++report.pairs.excluded_near_singular;
        continue;
      }
      BoundPair pair{x, y, std::abs(g.matrix(x, y)), std::exp(-rate * dist), false};
      pair.pass = pair.computed <= pair.bound * (1.0 + kBoundSlack);
      report.pairs.pairs.push_back(pair);
    }
  }

  // resolvent splitting: G(lambda) = F_{t,lambda}(H) + G(lambda) e^{-t(H^2-lambda^2)}
  // t is capped so no heat channel exceeds e^2 and round-off stays well
  // below the 1e-8 budget
  const double A = I.half_width;
  double growth = 0.0;
  for (int k = 0; k < es.size(); ++k)
    growth = std::max(growth, lambda * lambda - es.values(k) * es.values(k));
  const double t = growth > 0 ? std::min(1.0 / (A * A), 2.0 / growth) : 1.0 / (A * A);
  const Eigen::MatrixXd f_part = f_t_lambda(es, t, lambda, 0.0);
  const Eigen::MatrixXd heat = apply_spectral_function(es, [&](double z) {
    return std::exp(-t * (z * z - lambda * lambda));
  });
  report.splitting_residual = (g.matrix - (f_part + g.matrix * heat)).cwiseAbs().maxCoeff();
  report.splitting_ok = report.splitting_residual <= 1e-8;
  return report;
}

Eigen::MatrixXd spectral_projector(const Eigensystem& es, const EnergyInterval& interval) {
  return apply_spectral_function(es,
                                 [&](double z) { return interval.contains(z) ? 1.0 : 0.0; });
}

}  // namespace emsa::calculus
