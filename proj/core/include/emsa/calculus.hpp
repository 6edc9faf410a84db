#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "emsa/interval.hpp"
#include "emsa/spectral.hpp"

namespace emsa::calculus {

using spectral::EnergyInterval;
using spectral::Eigensystem;
using spectral::LocalizationVerdict;

/// Bounds checked per site pair; pass means computed <= bound up to a 1e-9
/// relative slack for round-off.
enum class BoundId { CT_3_7, CT_3_9, Heat_3_20, Green_6_2, Green_6_20, Split_6_9 };

std::string bound_id_name(BoundId id);

struct BoundPair {
  int x = 0;  // region indices
  int y = 0;
  double computed = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct BoundReport {
  BoundId id = BoundId::CT_3_9;
  std::vector<BoundPair> pairs;
  int excluded_near_singular = 0;
  bool hypotheses_ok = true;
  std::string hypothesis_failure;
  bool all_pass() const;
  std::size_t failures() const;
};

/// f(H) = Q f(Lambda) Q^T through the eigensystem; exact for polynomials up
/// to round-off. Throws if f is not finite on some eigenvalue.
Eigen::MatrixXd apply_spectral_function(const Eigensystem& es,
                                        const std::function<double(double)>& f);

/// Scalar kernel (1 - e^{-t(z^2 - lambda^2)}) / (z - lambda), with the
/// removable singularity 2 t lambda; evaluated through expm1 so nearby
/// arguments stay accurate.
double entire_kernel(double z, double t, double lambda);

/// Matrix of the kernel applied to H - E_shift at spectral parameter
/// lambda - E_shift.
Eigen::MatrixXd f_t_lambda(const Eigensystem& es, double t, double lambda, double E_shift);

/// Off-diagonal decay of the kernel at per-pair time t = m |x-y|_2 / A^2:
/// |<delta_x, F(H - E) delta_y>| <= 70 A^{-1} e^{-m h_I(lambda) |x-y|_2}.
/// Requires lambda in I and 0 < m <= (1/2) log(1 + A/(4d)) (rejected
/// otherwise: the estimate is unavailable above the cap). The eta-free form
/// at eta = A is evaluated alongside.
struct CombesThomasReport {
  BoundReport modulated;  // CT_3_9
  BoundReport eta_form;   // CT_3_7
};
CombesThomasReport check_combes_thomas(const Eigensystem& es, double lambda, double E_shift,
                                       const EnergyInterval& interval, double m);

/// Heat-factor tail: || e^{-t((H-E)^2 - (lambda-E)^2)} chi_{R \ I}(H) || <=
/// e^{-t A^2 h_I(lambda)}, computed over eigenvalues outside the open
/// interval.
BoundReport check_heat_tail(const Eigensystem& es, double t, double lambda,
                            const EnergyInterval& interval);

struct GreenResult {
  Eigen::MatrixXd matrix;
  double min_gap = 0.0;
  double condition = 0.0;  // 1 / min_gap
};

/// Resolvent (H - lambda)^{-1} through the eigensystem. Throws when lambda
/// is within 1e-14 of the spectrum.
GreenResult green(const Eigensystem& es, double lambda);

/// (m, E)-regularity: |G(E; x, y)| <= e^{-m ||x-y||} for all pairs with
/// sup-distance at least L/100.
bool check_regular(const Eigensystem& es, double E_energy, double m, double L);

/// Per-pair Green decay at rate c*m h_I(lambda) for pairs with sup-distance
/// >= L/100, plus the resolvent splitting identity
/// G = F_{t,lambda}(H) + G e^{-t(H^2 - lambda^2)} checked as matrices.
/// Hypotheses (lambda in the L-shrunk interval, spectral gap >= e^{-L^beta},
/// localizing verdict) are reported, not silently skipped.
struct GreenDecayReport {
  BoundReport pairs;          // Green_6_20
  double splitting_residual = 0.0;
  bool splitting_ok = false;
  bool hypotheses_ok = false;
  std::string hypothesis_failure;
};
GreenDecayReport check_green_decay(const Eigensystem& es, const EnergyInterval& I, double m,
                                   double lambda, double beta, double L, double kappa,
                                   const LocalizationVerdict* verdict, double c = 0.5);

/// Spectral projector chi_I(H).
Eigen::MatrixXd spectral_projector(const Eigensystem& es, const EnergyInterval& interval);

}  // namespace emsa::calculus
