#include "emsa/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace emsa::geometry {

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("dimension mismatch");
}

int floor_tol(double x) { return static_cast<int>(std::floor(x + kCoordTol)); }
int ceil_tol(double x) { return static_cast<int>(std::ceil(x - kCoordTol)); }

}  // namespace

int sup_dist(const Site& a, const Site& b) {
  require_same_dim(a.size(), b.size());
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double sup_dist(const RealPoint& a, const RealPoint& b) {
  require_same_dim(a.size(), b.size());
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double sup_dist(const RealPoint& a, const Site& b) {
  require_same_dim(a.size(), b.size());
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double euclid_dist(const Site& a, const Site& b) {
  require_same_dim(a.size(), b.size());
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    s += diff * diff;
  }
  return std::sqrt(s);
}

bool LatticeBox::contains(const Site& y) const {
  require_same_dim(center.size(), y.size());
  for (int i = 0; i < dim; ++i)
    if (std::abs(y[i] - center[i]) > side / 2 + kCoordTol) return false;
  return true;
}

bool LatticeBox::real_box_contains(const RealPoint& p) const {
  require_same_dim(center.size(), p.size());
  for (int i = 0; i < dim; ++i)
    if (std::abs(p[i] - center[i]) > side / 2 + kCoordTol) return false;
  return true;
}

std::pair<std::vector<int>, std::vector<int>> LatticeBox::site_bounds() const {
  std::vector<int> lo(dim), hi(dim);
  for (int i = 0; i < dim; ++i) {
    lo[i] = ceil_tol(center[i] - side / 2);
    hi[i] = floor_tol(center[i] + side / 2);
  }
  return {lo, hi};
}

SiteSet SiteSet::from_unsorted(int dim, std::vector<Site> raw) {
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  return SiteSet{dim, std::move(raw)};
}

bool SiteSet::contains(const Site& y) const {
  return std::binary_search(sites.begin(), sites.end(), y);
}

int SiteSet::index_of(const Site& y) const {
  auto it = std::lower_bound(sites.begin(), sites.end(), y);
  if (it == sites.end() || *it != y) return -1;
  return static_cast<int>(it - sites.begin());
}

bool SiteSet::is_subset_of(const SiteSet& other) const {
  return std::includes(other.sites.begin(), other.sites.end(), sites.begin(), sites.end());
}

SiteSet set_union(const SiteSet& a, const SiteSet& b) {
  SiteSet out;
  out.dim = a.dim;
  std::set_union(a.sites.begin(), a.sites.end(), b.sites.begin(), b.sites.end(),
                 std::back_inserter(out.sites));
  return out;
}

SiteSet set_difference(const SiteSet& a, const SiteSet& b) {
  SiteSet out;
  out.dim = a.dim;
  std::set_difference(a.sites.begin(), a.sites.end(), b.sites.begin(), b.sites.end(),
                      std::back_inserter(out.sites));
  return out;
}

SiteSet set_intersection(const SiteSet& a, const SiteSet& b) {
  SiteSet out;
  out.dim = a.dim;
  std::set_intersection(a.sites.begin(), a.sites.end(), b.sites.begin(), b.sites.end(),
                        std::back_inserter(out.sites));
  return out;
}

int diameter(const SiteSet& s) {
  if (s.empty()) return 0;
  int d = 0;
  for (int axis = 0; axis < s.dim; ++axis) {
    int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
    for (const auto& y : s.sites) {
      lo = std::min(lo, y[axis]);
      hi = std::max(hi, y[axis]);
    }
    d = std::max(d, hi - lo);
  }
  return d;
}

bool lattice_connected(const SiteSet& s) {
  if (s.empty()) return true;
  std::vector<char> seen(s.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t visited = 1;
  while (!stack.empty()) {
    const int cur = stack.back();
    stack.pop_back();
    Site y = s.sites[cur];
    for (int axis = 0; axis < s.dim; ++axis) {
      for (int step : {-1, 1}) {
        y[axis] += step;
        const int idx = s.index_of(y);
        y[axis] -= step;
        if (idx >= 0 && !seen[idx]) {
          seen[idx] = 1;
          ++visited;
          stack.push_back(idx);
        }
      }
    }
  }
  return visited == s.size();
}

SiteSet box_sites(const LatticeBox& box) {
  if (box.side <= 0) throw std::invalid_argument("box side must be positive");
  if (box.dim <= 0 || static_cast<int>(box.center.size()) != box.dim)
    throw std::invalid_argument("box center/dim mismatch");
  auto [lo, hi] = box.site_bounds();
  SiteSet out;
  out.dim = box.dim;
  Site cur(box.dim);
  // nested counting in lexicographic order, axis 0 slowest
  std::size_t total = 1;
  for (int i = 0; i < box.dim; ++i) {
    if (hi[i] < lo[i]) return out;  // no integer point on this axis
    total *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
  }
  out.sites.reserve(total);
  for (int i = 0; i < box.dim; ++i) cur[i] = lo[i];
  while (true) {
    out.sites.push_back(cur);
    int axis = box.dim - 1;
    while (axis >= 0) {
      if (cur[axis] < hi[axis]) {
        ++cur[axis];
        break;
      }
      cur[axis] = lo[axis];
      --axis;
    }
    if (axis < 0) break;
  }
  return out;
}

BoundaryData boundary(const SiteSet& phi, const SiteSet& theta) {
  if (!phi.is_subset_of(theta)) throw std::invalid_argument("phi must be a subset of theta");
  BoundaryData out;
  out.exterior.dim = out.interior.dim = phi.dim;
  std::vector<Site> ext, in;
  for (const auto& u : phi.sites) {
    Site v = u;
    bool u_on_boundary = false;
    for (int axis = 0; axis < phi.dim; ++axis) {
      for (int step : {-1, 1}) {
        v[axis] += step;
        if (theta.contains(v) && !phi.contains(v)) {
          out.edges.emplace_back(u, v);
          ext.push_back(v);
          u_on_boundary = true;
        }
        v[axis] -= step;
      }
    }
    if (u_on_boundary) in.push_back(u);
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.exterior = SiteSet::from_unsorted(phi.dim, std::move(ext));
  out.interior = SiteSet::from_unsorted(phi.dim, std::move(in));
  return out;
}

double boundary_edge_cap(double side, int dim) {
  return std::pow(2.0, dim) * dim * std::pow(side, dim - 1);
}

SiteSet t_interior(const SiteSet& phi, const SiteSet& theta, double t) {
  if (t < 1) throw std::invalid_argument("interior depth t must be >= 1");
  if (!phi.is_subset_of(theta)) throw std::invalid_argument("phi must be a subset of theta");
  const SiteSet complement = set_difference(theta, phi);
  if (complement.empty()) return phi;  // distance to the empty set is infinite
  const int depth = static_cast<int>(std::floor(t));
  SiteSet out;
  out.dim = phi.dim;
  for (const auto& y : phi.sites) {
    int dist = std::numeric_limits<int>::max();
    for (const auto& z : complement.sites) {
      dist = std::min(dist, sup_dist(y, z));
      if (dist <= depth) break;
    }
    if (dist > depth) out.sites.push_back(y);
  }
  return out;
}

SiteSet t_inner_boundary(const SiteSet& phi, const SiteSet& theta, double t) {
  return set_difference(phi, t_interior(phi, theta, t));
}

SiteSet t_exterior_boundary(const SiteSet& phi, const SiteSet& theta, double t) {
  if (t < 1) throw std::invalid_argument("boundary depth t must be >= 1");
  const SiteSet complement = set_difference(theta, phi);
  const int depth = static_cast<int>(std::floor(t));
  SiteSet out;
  out.dim = phi.dim;
  for (const auto& v : complement.sites) {
    for (const auto& u : phi.sites) {
      if (sup_dist(u, v) <= depth) {
        out.sites.push_back(v);
        break;
      }
    }
  }
  return out;
}

SiteSet t_boundary(const SiteSet& phi, const SiteSet& theta, double t) {
  return set_union(t_inner_boundary(phi, theta, t), t_exterior_boundary(phi, theta, t));
}

double CoverSpec::spacing() const { return rho * std::pow(child_side, varsigma); }

LatticeBox CoverSpec::child(int index) const {
  return LatticeBox{centers.at(index), child_side, parent.dim};
}

CoverSpec suitable_cover(const LatticeBox& parent, double child_side, double varsigma,
                         std::optional<double> rho_choice) {
  const double big = parent.side, ell = child_side;
  if (ell <= 0 || big <= 0) throw std::invalid_argument("box sides must be positive");
  if (ell > big / 2 + kCoordTol) throw std::invalid_argument("child side must satisfy ell <= L/2");
  if (varsigma <= 0 || varsigma >= 1) throw std::invalid_argument("varsigma must lie in (0,1)");

  const double base = std::pow(ell, varsigma);
  double rho = 0;
  int steps = 0;
  if (rho_choice) {
    rho = *rho_choice;
    if (rho < 0.5 - kCoordTol || rho > 1.0 + kCoordTol)
      throw std::invalid_argument("rho must lie in [1/2, 1]");
    const double k_real = (big - ell) / (2 * base * rho);
    steps = static_cast<int>(std::llround(k_real));
    if (steps < 1 || std::abs(k_real - steps) > 1e-6)
      throw std::invalid_argument("rho is not of the form (L-ell)/(2 ell^varsigma k)");
  } else {
    const int k_lo = ceil_tol((big - ell) / (2 * base));
    const int k_hi = floor_tol((big - ell) / base);
    if (k_lo > k_hi || k_lo < 1)
      throw std::runtime_error("no admissible rho in [1/2,1] for this (L, ell, varsigma)");
    steps = k_lo;  // smallest k gives the maximal admissible rho
    rho = (big - ell) / (2 * base * steps);
  }

  CoverSpec cover;
  cover.parent = parent;
  cover.child_side = ell;
  cover.varsigma = varsigma;
  cover.rho = rho;
  cover.steps = steps;

  const double step_len = rho * base;
  const int d = parent.dim;
  std::vector<int> j(d, -steps);
  while (true) {
    RealPoint c(d);
    for (int i = 0; i < d; ++i) c[i] = parent.center[i] + step_len * j[i];
    cover.centers.push_back(std::move(c));
    int axis = d - 1;
    while (axis >= 0) {
      if (j[axis] < steps) {
        ++j[axis];
        break;
      }
      j[axis] = -steps;
      --axis;
    }
    if (axis < 0) break;
  }
  return cover;
}

int cover_interior_assignment(const CoverSpec& cover, const Site& b) {
  if (!cover.parent.contains(b)) throw std::invalid_argument("site is not in the parent box");
  const double t = (cover.child_side - std::pow(cover.child_side, cover.varsigma)) / 2;
  const int depth = static_cast<int>(std::floor(std::max(t, 0.0)));
  auto [plo, phi_bounds] = cover.parent.site_bounds();
  const int d = cover.parent.dim;
  for (std::size_t idx = 0; idx < cover.centers.size(); ++idx) {
    auto [clo, chi] = cover.child(static_cast<int>(idx)).site_bounds();
    bool ok = true;
    for (int i = 0; i < d && ok; ++i) {
      if (b[i] < clo[i] || b[i] > chi[i]) ok = false;
      // the sup-ball of radius `depth` around b, clipped to the parent,
      // must stay inside the child
      if (ok && std::max(plo[i], b[i] - depth) < clo[i]) ok = false;
      if (ok && std::min(phi_bounds[i], b[i] + depth) > chi[i]) ok = false;
    }
    if (ok) return static_cast<int>(idx);
  }
  throw std::logic_error("cover invariant violated: no child interior contains the site");
}

CoverCheck check_cover(const CoverSpec& cover) {
  CoverCheck result;
  const SiteSet parent = box_sites(cover.parent);

  std::vector<Site> merged;
  for (std::size_t i = 0; i < cover.centers.size(); ++i) {
    const SiteSet child = box_sites(cover.child(static_cast<int>(i)));
    merged.insert(merged.end(), child.sites.begin(), child.sites.end());
  }
  result.union_ok = SiteSet::from_unsorted(cover.parent.dim, std::move(merged)) == parent;
  if (!result.union_ok) result.detail += "union of children differs from parent; ";

  result.interior_ok = true;
  for (const auto& b : parent.sites) {
    try {
      cover_interior_assignment(cover, b);
    } catch (const std::logic_error&) {
      result.interior_ok = false;
      result.detail += "interior coverage fails; ";
      break;
    }
  }

  const double expected =
      std::pow((cover.parent.side - cover.child_side) / cover.spacing() + 1.0, cover.parent.dim);
  result.count_ok = std::abs(expected - static_cast<double>(cover.centers.size())) < 1e-6;
  if (!result.count_ok) result.detail += "center count formula violated; ";

  const ClusterGraphs graphs =
      cluster_graphs(cover.centers, cover.rho, cover.child_side, cover.varsigma);
  const double threshold = graphs.k_ell * cover.spacing();
  result.disjoint_ok = true;
  for (std::size_t i = 0; i < cover.centers.size() && result.disjoint_ok; ++i) {
    for (std::size_t j = i + 1; j < cover.centers.size(); ++j) {
      const bool disjoint =
          real_boxes_disjoint(cover.centers[i], cover.centers[j], cover.child_side);
      const bool far = sup_dist(cover.centers[i], cover.centers[j]) >= threshold - kCoordTol;
      if (disjoint != far) {
        result.disjoint_ok = false;
        result.detail += "disjointness/distance equivalence fails; ";
        break;
      }
    }
  }
  return result;
}

bool real_boxes_disjoint(const RealPoint& a, const RealPoint& b, double side) {
  // boxes of radius side/2 intersect iff every axis separation is <= side
  return sup_dist(a, b) > side + kCoordTol;
}

ClusterGraphs cluster_graphs(const std::vector<RealPoint>& centers, double rho,
                             double child_side, double varsigma) {
  ClusterGraphs g;
  const double base = std::pow(child_side, varsigma);
  g.k_ell = floor_tol(std::pow(child_side, 1.0 - varsigma) / rho) + 1;
  g.g1_max = (g.k_ell - 1) * rho * base;
  g.g2_min = g.k_ell * rho * base;
  g.g2_max = 3.0 * (g.k_ell - 1) * rho * base;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    for (std::size_t j = i + 1; j < centers.size(); ++j) {
      const double dist = sup_dist(centers[i], centers[j]);
      if (dist > kCoordTol && dist <= g.g1_max + kCoordTol)
        g.g1_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      else if (dist >= g.g2_min - kCoordTol && dist <= g.g2_max + kCoordTol)
        g.g2_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return g;
}

std::vector<std::vector<int>> connected_components(const std::vector<int>& vertices,
                                                   const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> components;
  std::vector<int> todo = vertices;
  std::sort(todo.begin(), todo.end());
  std::vector<char> used(todo.size(), 0);
  auto pos = [&](int v) {
    auto it = std::lower_bound(todo.begin(), todo.end(), v);
    return (it != todo.end() && *it == v) ? static_cast<int>(it - todo.begin()) : -1;
  };
  for (std::size_t s = 0; s < todo.size(); ++s) {
    if (used[s]) continue;
    std::vector<int> comp, stack{todo[s]};
    used[s] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (const auto& [a, b] : edges) {
        int other = -1;
        if (a == v) other = b;
        else if (b == v) other = a;
        if (other < 0) continue;
        const int p = pos(other);
        if (p >= 0 && !used[p]) {
          used[p] = 1;
          stack.push_back(other);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

BufferedSubset build_buffered_subset(const std::vector<int>& component, const CoverSpec& cover,
                                     const ClusterGraphs& graphs, int ell_tau) {
  if (component.empty()) throw std::invalid_argument("component must be nonempty");
  {
    auto comps = connected_components(component, graphs.g2_edges);
    if (comps.size() != 1) throw std::invalid_argument("component is not G2-connected");
  }

  const double ell = cover.child_side;
  const int n = static_cast<int>(cover.centers.size());

  // grow by distance rho*ell around the component
  std::vector<int> grown;
  for (int i = 0; i < n; ++i) {
    for (int c : component) {
      if (sup_dist(cover.centers[i], cover.centers[c]) <= cover.rho * ell + kCoordTol) {
        grown.push_back(i);
        break;
      }
    }
  }

  // buffer shell: exterior G1 boundary of the grown set
  std::vector<char> in_grown(n, 0);
  for (int i : grown) in_grown[i] = 1;
  std::vector<int> buffer;
  for (const auto& [a, b] : graphs.g1_edges) {
    if (in_grown[a] && !in_grown[b]) buffer.push_back(b);
    if (in_grown[b] && !in_grown[a]) buffer.push_back(a);
  }
  std::sort(buffer.begin(), buffer.end());
  buffer.erase(std::unique(buffer.begin(), buffer.end()), buffer.end());

  const SiteSet parent_sites = box_sites(cover.parent);
  BufferedSubset out;
  out.grown_component = grown;
  out.buffer_indices = buffer;
  for (int i : buffer) out.buffer_centers.push_back(cover.centers[i]);

  std::vector<Site> region_raw;
  auto add_child = [&](int idx) {
    const SiteSet child = set_intersection(box_sites(cover.child(idx)), parent_sites);
    region_raw.insert(region_raw.end(), child.sites.begin(), child.sites.end());
  };
  for (int i : grown) add_child(i);
  for (int i : buffer) add_child(i);
  out.region = SiteSet::from_unsorted(cover.parent.dim, std::move(region_raw));

  std::vector<Site> shell_raw;
  for (int i : buffer) {
    const SiteSet child = box_sites(cover.child(i));
    shell_raw.insert(shell_raw.end(), child.sites.begin(), child.sites.end());
  }
  const SiteSet shell = SiteSet::from_unsorted(cover.parent.dim, std::move(shell_raw));
  out.core = set_difference(out.region, shell);

  std::vector<Site> buffer_interior_raw;
  if (ell_tau >= 1) {
    for (int i : buffer) {
      const SiteSet child = set_intersection(box_sites(cover.child(i)), out.region);
      const SiteSet deep = t_interior(child, out.region, 2.0 * ell_tau);
      buffer_interior_raw.insert(buffer_interior_raw.end(), deep.sites.begin(), deep.sites.end());
    }
  }
  out.buffer_interior = SiteSet::from_unsorted(cover.parent.dim, std::move(buffer_interior_raw));

  out.grown_g1_connected = connected_components(grown, graphs.g1_edges).size() == 1;
  out.connected = lattice_connected(out.region);
  out.boundary_covered =
      boundary(out.region, parent_sites).interior.is_subset_of(out.buffer_interior);
  out.diameter = diameter(out.region);
  if (out.diameter > 5.0 * ell * static_cast<double>(component.size()) + kCoordTol)
    throw std::runtime_error("buffered subset diameter bound violated");
  return out;
}

}  // namespace emsa::geometry
