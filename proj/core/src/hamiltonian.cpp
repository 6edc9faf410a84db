#include "emsa/hamiltonian.hpp"

#include <algorithm>
#include <stdexcept>

namespace emsa::model {

FiniteHamiltonian assemble(const SiteSet& region, const Potential& potential) {
  if (!(potential.region == region))
    throw std::invalid_argument("potential region does not match the assembly region");
  const int n = static_cast<int>(region.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    h(i, i) = potential.values[i];
    Site y = region.sites[i];
    for (int axis = 0; axis < region.dim; ++axis) {
      for (int step : {-1, 1}) {
        y[axis] += step;
        const int j = region.index_of(y);
        y[axis] -= step;
        if (j >= 0) h(i, j) = -1.0;
      }
    }
  }
  return FiniteHamiltonian{region, std::move(h)};
}

FiniteHamiltonian restrict_to(const FiniteHamiltonian& parent, const SiteSet& sub) {
  if (!sub.is_subset_of(parent.region))
    throw std::invalid_argument("restriction target is not a subset of the region");
  const int n = static_cast<int>(sub.size());
  std::vector<int> map(n);
  for (int i = 0; i < n; ++i) map[i] = parent.region.index_of(sub.sites[i]);
  Eigen::MatrixXd h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = parent.matrix(map[i], map[j]);
  return FiniteHamiltonian{sub, std::move(h)};
}

Eigen::SparseMatrix<double> coupling_gamma(const SiteSet& phi, const SiteSet& theta) {
  if (!phi.is_subset_of(theta)) throw std::invalid_argument("phi must be a subset of theta");
  const auto bd = geometry::boundary(phi, theta);
  const int n = static_cast<int>(theta.size());
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(2 * bd.edges.size());
  for (const auto& [u, v] : bd.edges) {
    const int i = theta.index_of(u), j = theta.index_of(v);
    triplets.emplace_back(i, j, -1.0);
    triplets.emplace_back(j, i, -1.0);
  }
  Eigen::SparseMatrix<double> gamma(n, n);
  gamma.setFromTriplets(triplets.begin(), triplets.end());
  return gamma;
}

Eigen::MatrixXd decoupled_hamiltonian(const FiniteHamiltonian& on_theta, const SiteSet& phi) {
  const SiteSet& theta = on_theta.region;
  if (!phi.is_subset_of(theta)) throw std::invalid_argument("phi must be a subset of theta");
  const int n = static_cast<int>(theta.size());
  std::vector<char> in_phi(n, 0);
  for (const auto& u : phi.sites) in_phi[theta.index_of(u)] = 1;
  Eigen::MatrixXd h = on_theta.matrix;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (in_phi[i] != in_phi[j]) h(i, j) = 0.0;
  return h;
}

std::vector<std::pair<double, double>> almost_sure_spectrum(const DisorderSpec& spec, int dim) {
  spec.validate();
  const auto [lo, hi] = spec.support();
  return {{-2.0 * dim + lo, 2.0 * dim + hi}};
}

}  // namespace emsa::model
