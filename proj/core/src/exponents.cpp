#include "emsa/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace emsa::exponents {

double ExponentSet::varrho() const {
  return std::min({kappa, (1.0 - tau) / 2.0, gamma * tau - (gamma - 1.0) * zeta_tilde() - 1.0});
}

std::vector<ConstraintViolation> validate(const ExponentSet& e) {
  std::vector<ConstraintViolation> out;
  auto check = [&](bool ok, const char* eq, const char* detail) {
    if (!ok) out.push_back({eq, detail});
  };

  check(e.xi > 0, "1.1", "0 < xi");
  check(e.xi < e.zeta, "1.1", "xi < zeta");
  check(e.zeta < e.beta, "1.1", "zeta < beta");
  check(e.beta < 1.0 / e.gamma, "1.1", "beta < 1/gamma");
  check(e.gamma > 1.0, "1.1", "1 < gamma");
  check(e.xi > 0 && e.zeta > 0 && e.gamma < std::sqrt(e.zeta / e.xi), "1.1",
        "gamma < sqrt(zeta/xi)");
  const double tau_floor = std::max(e.gamma * e.beta, ((e.gamma - 1.0) * e.beta + 1.0) / e.gamma);
  check(tau_floor < e.tau, "1.1", "max(gamma beta, ((gamma-1)beta+1)/gamma) < tau");
  check(e.tau < 1.0, "1.1", "tau < 1");

  // consequences of (1.1); redundant but named separately when violated
  check(e.xi * e.gamma * e.gamma < e.zeta, "1.2", "xi gamma^2 < zeta");
  check(e.beta < e.tau / e.gamma, "1.2", "beta < tau/gamma");
  check(e.gamma < e.tau / e.beta, "1.2", "gamma < tau/beta");
  check((1.0 - e.beta) / (e.tau - e.beta) < e.gamma, "1.2", "(1-beta)/(tau-beta) < gamma");

  check((e.gamma - 1.0) * e.zeta_tilde() + 1.0 < (e.gamma - 1.0) * e.beta + 1.0, "1.4",
        "(gamma-1) zeta~ + 1 < (gamma-1) beta + 1");
  check((e.gamma - 1.0) * e.beta + 1.0 < e.gamma * e.tau, "1.4",
        "(gamma-1) beta + 1 < gamma tau");

  check(e.kappa > 0 && e.kappa < 1, "1.5", "kappa in (0,1)");
  check(e.kappa_prime >= 0 && e.kappa_prime < 1, "1.5", "kappa' in [0,1)");
  check(e.kappa + e.kappa_prime < e.tau - e.gamma * e.beta, "1.5",
        "kappa + kappa' < tau - gamma beta");

  check(e.varrho() > 0, "1.6", "varrho > 0");

  check(e.varsigma > 0 && e.varsigma <= 1.0 - e.varrho(), "1.7", "varsigma in (0, 1 - varrho]");
  return out;
}

namespace {

constexpr double kTauGrid[] = {0.9995, 0.999, 0.998, 0.995, 0.99, 0.98, 0.97,
                               0.95,   0.92,  0.9,   0.85,  0.8,  0.75, 0.7};
constexpr double kGammaGrid[] = {1.001, 1.002, 1.005, 1.01, 1.02, 1.05, 1.1,
                                 1.15,  1.2,   1.3,   1.5,  1.75, 2.0,  2.5};

std::optional<ExponentSet> attempt(double xi, double zeta, double gamma, double tau,
                                   double kappa_prime_fixed, bool bottom) {
  // beta window from (1.1): zeta < beta < min(tau/gamma, (gamma tau - 1)/(gamma - 1));
  // a fixed kappa' additionally needs budget tau - gamma beta > kappa'
  double beta_hi = std::min(tau / gamma, (gamma * tau - 1.0) / (gamma - 1.0));
  if (bottom) beta_hi = std::min(beta_hi, (tau - kappa_prime_fixed - 1e-3) / gamma);
  if (beta_hi <= zeta) return std::nullopt;
  ExponentSet e;
  e.xi = xi;
  e.zeta = zeta;
  e.gamma = gamma;
  e.tau = tau;
  e.beta = zeta + 0.25 * (beta_hi - zeta);

  const double budget = tau - gamma * e.beta;
  e.kappa_prime = bottom ? kappa_prime_fixed : 0.25 * budget;
  if (e.kappa_prime >= budget) return std::nullopt;
  e.kappa = 0.5 * (budget - e.kappa_prime);
  if (e.kappa <= 0 || e.kappa >= 1) return std::nullopt;

  if (e.varrho() <= 0) return std::nullopt;
  e.varsigma = std::min(0.5, 1.0 - e.varrho());
  return validate(e).empty() ? std::optional<ExponentSet>(e) : std::nullopt;
}

}  // namespace

SolveOutcome solve(double xi, double zeta, int dim, SolveMode mode) {
  if (!(xi > 0 && xi < zeta && zeta < 1))
    throw std::invalid_argument("solve requires 0 < xi < zeta < 1");
  const bool bottom = mode == SolveMode::BottomOfSpectrum;
  if (bottom && zeta >= static_cast<double>(dim) / (dim + 2))
    return {std::nullopt, "2.3: zeta < d/(d+2)"};
  const double kappa_prime_fixed = bottom ? 2.0 * zeta / dim : 0.0;
  const double gamma_cap = std::sqrt(zeta / xi);

  // among feasible grid points keep the most robust varrho; ties go to
  // larger tau, then smaller gamma (tau at the top of the grid makes
  // (1 - tau)/2 degenerate and schedules collapse at any finite L0)
  std::optional<ExponentSet> best;
  for (double tau : kTauGrid) {
    for (double gamma : kGammaGrid) {
      if (gamma >= gamma_cap) break;
      if (gamma * tau <= 1.0) continue;  // beta window would be empty
      const auto e = attempt(xi, zeta, gamma, tau, kappa_prime_fixed, bottom);
      if (!e) continue;
      if (!best || e->varrho() > best->varrho() + 1e-12) best = e;
    }
  }
  if (best) return {best, ""};
  return {std::nullopt, bottom ? "1.5: kappa + kappa' < tau - gamma beta with kappa' = 2 zeta/d"
                               : "1.1: no feasible (gamma, tau, beta) on the search grid"};
}

double mass_cap(double A, int dim) {
  if (A <= 0) throw std::invalid_argument("interval half-width must be positive");
  return 0.5 * std::log1p(A / (4.0 * dim));
}

namespace {

// limit of prod (1 - x_k), x_{k+1} = x_k^gamma, truncated when the next
// factor is within 1e-15 of one; the neglected tail is geometric-like with
// ratio x^(gamma-1)
struct ProductLimit {
  double value = 1.0;
  double tail = 0.0;
};

ProductLimit limit_product(double x0, double gamma) {
  ProductLimit out;
  double x = x0;
  for (int k = 0; k < 100000; ++k) {
    if (x < 1e-15) {
      const double ratio = std::pow(x, gamma - 1.0);
      const double sum = x / std::max(1.0 - ratio, 1e-2);
      out.tail = 2.0 * sum;
      return out;
    }
    out.value *= (1.0 - x);
    if (out.value <= 0) throw std::runtime_error("schedule product hit zero: L0 too small");
    x = std::pow(x, gamma);
  }
  throw std::runtime_error("schedule product did not converge");
}

}  // namespace

ScaleSchedule schedule(double L0, const ExponentSet& e, double A0, double m0, double C,
                       int K_levels, int dim) {
  if (L0 < 2) throw std::invalid_argument("L0 must be at least 2");
  if (K_levels < 1) throw std::invalid_argument("need at least one level");
  if (m0 > mass_cap(A0, dim) * (1.0 + 1e-12))
    throw std::invalid_argument("m0 exceeds the cap (1/2) log(1 + A0/4d)");

  ScaleSchedule out;
  double L = L0, A = A0, m = m0;
  for (int k = 0; k < K_levels; ++k) {
    out.levels.push_back({L, A, m});
    const double a_factor = 1.0 - std::pow(L, -e.kappa);
    const double m_factor = 1.0 - C * std::pow(L, -e.varrho());
    if (a_factor <= 0 || m_factor <= 0)
      throw std::runtime_error("schedule factor hit zero: L0 too small");
    A *= a_factor;
    m *= m_factor;
    L = std::pow(L, e.gamma);
  }

  const ProductLimit a_lim = limit_product(std::pow(L0, -e.kappa), e.gamma);
  out.A_inf = A0 * a_lim.value;
  out.tail_bound = a_lim.tail;
  if (C > 0) {
    const ProductLimit m_lim = limit_product(C * std::pow(L0, -e.varrho()), e.gamma);
    out.m_inf = m0 * m_lim.value;
    out.tail_bound = std::max(out.tail_bound, m_lim.tail);
  } else {
    out.m_inf = m0;
  }
  return out;
}

RateSet rate_schedule(double m, double ell, const ExponentSet& e, double C) {
  if (ell <= 1) throw std::invalid_argument("rate schedule needs ell > 1");
  const double gb = e.gamma * e.beta;
  auto degrade = [&](double penalty_exponent, double log_factor = 0.0) {
    const double factor =
        1.0 - C * (log_factor > 0 ? std::log(ell) : 1.0) * std::pow(ell, -penalty_exponent);
    if (factor <= 0) throw std::runtime_error("rate factor nonpositive: ell too small for C");
    return m * factor;
  };
  RateSet r;
  r.m1 = degrade(e.tau - e.kappa - e.kappa_prime, 1.0);
  r.m2 = degrade(e.tau - gb - e.kappa - e.kappa_prime);
  r.m3 = degrade((1.0 - e.tau) / 2.0);
  r.m4 = degrade(e.tau - gb - e.kappa - e.kappa_prime);
  r.m5 = degrade(std::min(e.kappa, e.tau - gb - e.kappa - e.kappa_prime));
  r.m_dprime = degrade(1.0 - e.tau);
  r.M = degrade(e.varrho());
  return r;
}

long long bad_box_budget(double ell, const ExponentSet& e) {
  if (ell <= 1) throw std::invalid_argument("bad box budget needs ell > 1");
  return static_cast<long long>(std::floor(std::pow(ell, (e.gamma - 1.0) * e.zeta_tilde())));
}

}  // namespace emsa::exponents
