#include "emsa/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace emsa::spectral {

namespace {

// full residual/orthonormality verification is an n^3 matmul; above this
// size we rely on the solver's own convergence report
constexpr int kVerifyMaxSize = 512;
constexpr double kBoundSlack = 1e-9;        // relative, pure round-off
constexpr double kDegenerateGap = 1e-12;

int localization_center(const SiteSet& region, const Eigen::VectorXd& phi) {
  int best = 0;
  double best_amp = std::abs(phi(0));
  for (int i = 1; i < phi.size(); ++i) {
    const double amp = std::abs(phi(i));
    if (amp > best_amp) {
      best = i;
      best_amp = amp;
    }
  }
  (void)region;
  return best;  // region order is lexicographic, first maximizer wins
}

}  // namespace

Eigensystem eigensystem(const FiniteHamiltonian& h, double tol) {
  const int n = static_cast<int>(h.region.size());
  if (h.matrix.rows() != n || h.matrix.cols() != n)
    throw std::invalid_argument("hamiltonian matrix does not match its region");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.matrix);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("dense symmetric eigensolver failed to converge");

  Eigensystem es;
  es.region = h.region;
  es.values = solver.eigenvalues();
  es.vectors = solver.eigenvectors();
  es.residual_tol = tol;
  es.center_index.reserve(n);
  for (int k = 0; k < n; ++k) es.center_index.push_back(localization_center(es.region, es.vectors.col(k)));

  if (n <= kVerifyMaxSize) {
    const double residual =
        (h.matrix * es.vectors - es.vectors * es.values.asDiagonal()).cwiseAbs().maxCoeff();
    if (residual > tol) throw std::runtime_error("eigensystem residual above tolerance");
    const double ortho =
        (es.vectors.transpose() * es.vectors - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
    if (ortho > 1e-10) throw std::runtime_error("eigenvectors are not orthonormal");
  }
  return es;
}

bool level_spacing_check(const Eigensystem& es, double R, double beta) {
  if (R <= 0) throw std::invalid_argument("level spacing scale R must be positive");
  if (beta <= 0 || beta >= 1) throw std::invalid_argument("beta must lie in (0,1)");
  const double threshold = std::exp(-std::pow(R, beta));
  for (int k = 0; k + 1 < es.size(); ++k) {
    const double gap = es.values(k + 1) - es.values(k);
    if (gap < threshold || gap < kDegenerateGap) return false;
  }
  return true;
}

bool localized_check(const SiteSet& region, const Eigen::VectorXd& phi, const Site& x, double m,
                     double L, double tau) {
  if (m < 0) throw std::invalid_argument("decay rate must be nonnegative");
  const int cutoff = static_cast<int>(std::floor(std::pow(L, tau)));
  for (std::size_t i = 0; i < region.size(); ++i) {
    const int dist = geometry::sup_dist(region.sites[i], x);
    if (dist < cutoff) continue;
    const double bound = std::exp(-m * dist);
    if (std::abs(phi(static_cast<int>(i))) > bound * (1.0 + 1e-12)) return false;
  }
  return true;
}

double best_rate(const SiteSet& region, const Eigen::VectorXd& phi, const Site& x, double L,
                 double tau) {
  const int cutoff = static_cast<int>(std::floor(std::pow(L, tau)));
  double rate = kRateCap;
  for (std::size_t i = 0; i < region.size(); ++i) {
    const int dist = geometry::sup_dist(region.sites[i], x);
    if (dist < cutoff || dist == 0) continue;
    const double amp = std::abs(phi(static_cast<int>(i)));
    if (amp == 0.0) continue;  // infinite rate at this site
    rate = std::min(rate, -std::log(amp) / dist);
  }
  return std::clamp(rate, 0.0, kRateCap);
}

LocalizationVerdict localizing_verdict(const Eigensystem& es, double m, const EnergyInterval& J,
                                       const EnergyInterval& I, double beta, double tau,
                                       double L) {
  if (std::abs(J.center - I.center) > 1e-12 * std::max(1.0, std::abs(I.center)))
    throw std::invalid_argument("J and I must share their center");
  if (J.half_width > I.half_width * (1.0 + 1e-12))
    throw std::invalid_argument("J must be contained in I");

  LocalizationVerdict verdict;
  verdict.level_spacing = level_spacing_check(es, L, beta);
  verdict.overall = verdict.level_spacing;
  verdict.witness_rate = kRateCap;

  verdict.rows.reserve(es.size());
  for (int k = 0; k < es.size(); ++k) {
    VerdictRow row;
    row.eigenvalue = es.values(k);
    row.in_window = J.contains(row.eigenvalue);
    const double weight = row.in_window ? modulating_weight(row.eigenvalue, I) : 0.0;
    row.required_rate = m * weight;
    row.achieved =
        localized_check(es.region, es.vectors.col(k), es.center_site(k), row.required_rate, L, tau);
    if (row.in_window && !row.achieved) verdict.overall = false;
    if (row.in_window && weight > 0) {
      const double rate = best_rate(es.region, es.vectors.col(k), es.center_site(k), L, tau);
      verdict.witness_rate = std::min(verdict.witness_rate, rate / weight);
    }
    verdict.rows.push_back(row);
  }
  return verdict;
}

MatchReport match_eigenvalues(const Eigensystem& inner, const Eigensystem& outer,
                              const EnergyInterval& I, const MatchParams& params) {
  if (outer.size() == 0) throw std::invalid_argument("outer spectrum is empty");
  if (!inner.region.is_subset_of(outer.region))
    throw std::invalid_argument("inner region must be contained in the outer region");

  const EnergyInterval window =
      params.selection ? *params.selection : shrink_interval(I, 2.0 * params.ell, params.kappa);
  const int ell_tau = static_cast<int>(std::floor(std::pow(params.ell, params.tau)));
  const SiteSet interior = ell_tau >= 1
                               ? geometry::t_interior(inner.region, outer.region, ell_tau)
                               : inner.region;

  const int d = inner.region.dim;
  const double s_d = std::pow(2.0, d) * d;
  const double prefactor = std::sqrt(s_d) * std::pow(params.ell, (d - 1) / 2.0);

  MatchReport report;
  std::set<int> taken;
  for (int k = 0; k < inner.size(); ++k) {
    const double lambda = inner.values(k);
    if (!window.contains(lambda)) continue;
    if (!interior.contains(inner.center_site(k))) continue;
    ++report.selected;

    // nearest outer eigenvalue (ascending order)
    const double* begin = outer.values.data();
    const double* end = begin + outer.size();
    const double* it = std::lower_bound(begin, end, lambda);
    int j = static_cast<int>(it - begin);
    if (j == outer.size()) j = outer.size() - 1;
    else if (j > 0 && lambda - outer.values(j - 1) < outer.values(j) - lambda) --j;

    EigenvalueMatch match;
    match.inner_index = k;
    match.outer_index = j;
    match.inner_value = lambda;
    match.outer_value = outer.values(j);
    match.distance = std::abs(lambda - match.outer_value);
    match.bound = prefactor * std::exp(-params.m * modulating_weight(lambda, I) * ell_tau);
    match.bound_ok = match.distance <= match.bound * (1.0 + kBoundSlack);
    if (!taken.insert(j).second) report.injective = false;
    report.pairs.push_back(match);
  }
  return report;
}

bool InteriorDecayReport::all_pass() const {
  if (!hypotheses_ok) return false;
  for (const auto& row : deep_rows)
    if (!row.pass) return false;
  for (const auto& row : graded_rows)
    if (!row.pass) return false;
  return true;
}

InteriorDecayReport interior_decay_check(const Eigensystem& outer, int outer_k,
                                         const SiteSet& inner_box_sites, const Eigensystem& inner,
                                         const EnergyInterval& I, double m_eff, double ell,
                                         double tau, double kappa, double beta, double L,
                                         std::optional<EnergyInterval> selection) {
  InteriorDecayReport report;
  const double lambda = outer.values(outer_k);
  const Eigen::VectorXd& psi = outer.vectors.col(outer_k);

  const EnergyInterval shrunk = shrink_interval(I, ell, kappa);
  if (!shrunk.contains(lambda)) {
    report.hypothesis_failure = "lambda outside the ell-shrunk interval";
    return report;
  }
  const int ell_tau = static_cast<int>(std::floor(std::pow(ell, tau)));
  if (ell_tau < 1) {
    report.hypothesis_failure = "ell_tau below one";
    return report;
  }

  // separation from inner eigenvalues with interior centers
  const EnergyInterval window = selection ? *selection : I;
  const SiteSet sel_interior = geometry::t_interior(inner.region, outer.region, ell_tau);
  const double min_sep = 0.5 * std::exp(-std::pow(L, beta));
  for (int k = 0; k < inner.size(); ++k) {
    if (!window.contains(inner.values(k))) continue;
    if (!sel_interior.contains(inner.center_site(k))) continue;
    if (std::abs(lambda - inner.values(k)) < min_sep) {
      report.hypothesis_failure = "lambda too close to a selected inner eigenvalue";
      return report;
    }
  }
  report.hypotheses_ok = true;

  const SiteSet shell = geometry::t_boundary(inner_box_sites, outer.region, 2.0 * ell_tau);
  double shell_max = 0.0;
  for (const auto& v : shell.sites) {
    const int idx = outer.region.index_of(v);
    shell_max = std::max(shell_max, std::abs(psi(idx)));
  }

  const double weight = modulating_weight(lambda, I);
  const SiteSet deep = geometry::t_interior(inner_box_sites, outer.region, 2.0 * ell_tau);
  for (const auto& y : deep.sites) {
    DecayRow row;
    row.site = y;
    row.amplitude = std::abs(psi(outer.region.index_of(y)));
    row.bound = std::exp(-m_eff * weight * ell_tau) * shell_max;
    row.margin = row.bound - row.amplitude;
    row.pass = row.amplitude <= row.bound * (1.0 + kBoundSlack);
    report.deep_rows.push_back(std::move(row));
  }

  const SiteSet graded = geometry::t_interior(inner_box_sites, outer.region, ell_tau);
  const SiteSet inner_bd = geometry::boundary(inner_box_sites, outer.region).interior;
  for (const auto& y : graded.sites) {
    DecayRow row;
    row.site = y;
    row.amplitude = std::abs(psi(outer.region.index_of(y)));
    int r_y = 0;
    if (!inner_bd.empty()) {
      r_y = std::numeric_limits<int>::max();
      for (const auto& u : inner_bd.sites) r_y = std::min(r_y, geometry::sup_dist(y, u));
    }
    row.bound = std::exp(-m_eff * weight * r_y) * shell_max;
    row.margin = row.bound - row.amplitude;
    row.pass = row.amplitude <= row.bound * (1.0 + kBoundSlack);
    report.graded_rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace emsa::spectral
