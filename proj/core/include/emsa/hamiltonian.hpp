#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <vector>

#include "emsa/disorder.hpp"
#include "emsa/geometry.hpp"

namespace emsa::model {

/// Finite-volume H = -Laplacian + V on a site set: diagonal V(x), off-diagonal
/// -1 exactly between nearest neighbors, ordering matching the region.
struct FiniteHamiltonian {
  SiteSet region;
  Eigen::MatrixXd matrix;
};

FiniteHamiltonian assemble(const SiteSet& region, const Potential& potential);

/// Principal submatrix on sub's sites.
FiniteHamiltonian restrict_to(const FiniteHamiltonian& parent, const SiteSet& sub);

/// Boundary coupling Gamma on theta: H_theta = (H_phi (+) H_{theta\phi}) + Gamma.
Eigen::SparseMatrix<double> coupling_gamma(const SiteSet& phi, const SiteSet& theta);

/// Block-diagonal part H_phi (+) H_{theta\phi} scattered into theta's ordering;
/// the decomposition identity partner of coupling_gamma.
Eigen::MatrixXd decoupled_hamiltonian(const FiniteHamiltonian& on_theta, const SiteSet& phi);

/// Almost-sure spectrum [-2d, 2d] + g*supp(mu), as a merged interval union.
std::vector<std::pair<double, double>> almost_sure_spectrum(const DisorderSpec& spec, int dim);

}  // namespace emsa::model
