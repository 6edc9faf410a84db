#pragma once

#include <optional>
#include <string>
#include <vector>

namespace emsa::exponents {

/// The multiscale exponent tuple. The free fields are (xi, zeta, beta, tau,
/// gamma, kappa, kappa_prime, varsigma); zeta_tilde, tau_tilde and varrho are
/// derived.
struct ExponentSet {
  double xi = 0.0;
  double zeta = 0.0;
  double beta = 0.0;
  double tau = 0.0;
  double gamma = 0.0;
  double kappa = 0.0;
  double kappa_prime = 0.0;
  double varsigma = 0.0;

  double zeta_tilde() const { return 0.5 * (zeta + beta); }
  double tau_tilde() const { return 0.5 * (1.0 + tau); }
  double varrho() const;
};

struct ConstraintViolation {
  std::string equation;  // which constraint family, e.g. "1.1"
  std::string detail;    // the violated inequality
};

/// Empty iff every constraint in the chain (1.1)-(1.7) holds; each violation
/// names its equation.
std::vector<ConstraintViolation> validate(const ExponentSet& e);

enum class SolveMode { Generic, BottomOfSpectrum };

struct SolveOutcome {
  std::optional<ExponentSet> exponents;
  std::string binding_constraint;  // set when infeasible
  bool feasible() const { return exponents.has_value(); }
};

/// Deterministic coarse-to-fine search: tau from a grid approaching 1 (larger
/// preferred), gamma ascending (smaller preferred), beta/kappa placed by
/// formula. Bottom-of-spectrum mode fixes kappa_prime = 2 zeta / d and is
/// feasible only for zeta < d/(d+2).
SolveOutcome solve(double xi, double zeta, int dim, SolveMode mode);

/// Rate cap (1/2) log(1 + A / 4d).
double mass_cap(double A, int dim);

struct ScheduleRow {
  double L = 0.0;
  double A = 0.0;
  double m = 0.0;
};

struct ScaleSchedule {
  std::vector<ScheduleRow> levels;
  double A_inf = 0.0;
  double m_inf = 0.0;
  double tail_bound = 0.0;  // analytic bound on the truncation error
};

/// Scale sequence L_{k+1} = L_k^gamma with interval and mass losses
/// A_{k+1} = A_k (1 - L_k^{-kappa}), m_{k+1} = m_k (1 - C L_k^{-varrho}),
/// plus the limit products truncated once factors are within 1e-15 of one.
ScaleSchedule schedule(double L0, const ExponentSet& e, double A0, double m0, double C,
                       int K_levels, int dim);

/// Rate degradations at scale ell, each of the form m (1 - C ell^{-p}) with
/// the exponents the multiscale lemmas produce.
struct RateSet {
  double m1 = 0.0;        // p = tau - kappa - kappa', with a log ell factor
  double m2 = 0.0;        // p = tau - gamma beta - kappa - kappa'
  double m3 = 0.0;        // p = (1 - tau)/2
  double m4 = 0.0;        // p = tau - gamma beta - kappa - kappa'
  double m5 = 0.0;        // p = min(kappa, tau - gamma beta - kappa - kappa')
  double m_dprime = 0.0;  // p = 1 - tau
  double M = 0.0;         // p = varrho
};

RateSet rate_schedule(double m, double ell, const ExponentSet& e, double C);

/// Bad-box budget floor(ell^{(gamma-1) zeta_tilde}).
long long bad_box_budget(double ell, const ExponentSet& e);

}  // namespace emsa::exponents
