#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "emsa/geometry.hpp"
#include "emsa/hamiltonian.hpp"
#include "emsa/interval.hpp"

namespace emsa::spectral {

using geometry::Site;
using geometry::SiteSet;
using model::FiniteHamiltonian;

/// Decay rates are reported as min over sites of -log|phi| / distance; sites
/// with zero amplitude would give +infinity and are capped here. Any finite
/// double amplitude at distance >= 1 stays below this cap.
inline constexpr double kRateCap = 1e4;

/// Full eigendecomposition of a finite Hamiltonian. Eigenvalues ascend,
/// eigenvector columns are orthonormal, and each eigenvector carries a
/// localization center: the lexicographically smallest maximizer of |phi|.
struct Eigensystem {
  SiteSet region;
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
  std::vector<int> center_index;
  double residual_tol = 0.0;

  int size() const { return static_cast<int>(values.size()); }
  const Site& center_site(int k) const { return region.sites[center_index[k]]; }
};

/// Dense symmetric eigendecomposition with residual/orthonormality
/// verification up to `verify_max_size` (larger systems trust the solver).
Eigensystem eigensystem(const FiniteHamiltonian& h, double tol = 1e-8);

/// All eigenvalue gaps at least e^{-R^beta}. Gaps below 1e-12 fail outright:
/// eigenvector bases are unstable there regardless of the threshold.
bool level_spacing_check(const Eigensystem& es, double R, double beta);

/// |phi(y)| <= e^{-m ||y - x||} for all y with ||y - x|| >= floor(L^tau).
bool localized_check(const SiteSet& region, const Eigen::VectorXd& phi, const Site& x, double m,
                     double L, double tau);

/// Largest uniform rate passing localized_check (capped at kRateCap).
double best_rate(const SiteSet& region, const Eigen::VectorXd& phi, const Site& x, double L,
                 double tau);

struct VerdictRow {
  double eigenvalue = 0.0;
  bool in_window = false;       // eigenvalue in J
  double required_rate = 0.0;   // m chi_J(nu) h_I(nu)
  bool achieved = false;
};

struct LocalizationVerdict {
  bool level_spacing = false;
  std::vector<VerdictRow> rows;
  bool overall = false;
  double witness_rate = 0.0;  // largest uniform m that would pass
};

/// Verdict for a box of side L: level spacing at R = L plus, for every
/// eigenvalue, decay at rate m chi_J(nu) h_I(nu) from its assigned center.
/// J and I must share their center.
LocalizationVerdict localizing_verdict(const Eigensystem& es, double m, const EnergyInterval& J,
                                       const EnergyInterval& I, double beta, double tau, double L);

struct EigenvalueMatch {
  int inner_index = 0;
  int outer_index = 0;
  double inner_value = 0.0;
  double outer_value = 0.0;
  double distance = 0.0;
  double bound = 0.0;  // sqrt(s_d) ell^{(d-1)/2} e^{-m h_I(lambda) ell_tau}
  bool bound_ok = false;
};

struct MatchReport {
  std::vector<EigenvalueMatch> pairs;
  bool injective = true;
  int selected = 0;
};

struct MatchParams {
  double m = 0.0;
  double ell = 0.0;
  double kappa = 0.0;
  double tau = 0.0;
  /// Selection window for inner eigenvalues; defaults to the 2*ell shrink
  /// of I. Exposed because the candidate windows differ between uses.
  std::optional<EnergyInterval> selection;
};

/// Matches inner-box eigenvalues with interior localization centers against
/// the nearest spectrum of the enclosing region.
MatchReport match_eigenvalues(const Eigensystem& inner, const Eigensystem& outer,
                              const EnergyInterval& I, const MatchParams& params);

struct DecayRow {
  Site site;
  double amplitude = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // bound - amplitude
  bool pass = false;
};

struct InteriorDecayReport {
  bool hypotheses_ok = false;
  std::string hypothesis_failure;
  std::vector<DecayRow> deep_rows;      // fixed-depth bound over the 2 ell_tau interior
  std::vector<DecayRow> graded_rows;    // distance-graded bound over the ell_tau interior
  bool all_pass() const;
};

/// For an eigenpair (psi, lambda) of the outer region and a localizing inner
/// box: checks that psi is exponentially small deep inside the box, against
/// the maximum of |psi| over the 2 ell_tau shell of the box. The separation
/// hypothesis |lambda - nu| >= e^{-L^beta}/2 is tested against inner
/// eigenvalues selected by `selection` (default: I) with interior centers.
InteriorDecayReport interior_decay_check(const Eigensystem& outer, int outer_k,
                                         const SiteSet& inner_box_sites, const Eigensystem& inner,
                                         const EnergyInterval& I, double m_eff, double ell,
                                         double tau, double kappa, double beta, double L,
                                         std::optional<EnergyInterval> selection = std::nullopt);

}  // namespace emsa::spectral
