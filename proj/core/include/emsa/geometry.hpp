#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace emsa::geometry {

/// Lattice site in Z^d. Lexicographic vector order is the canonical order
/// everywhere, so derived matrices and records are reproducible bit-for-bit.
using Site = std::vector<int>;
/// Point of R^d (box centers may be off-lattice).
using RealPoint = std::vector<double>;

/// Comparison slack for real lattice coordinates. Cover spacings of the form
/// rho * l^varsigma are irrational in general; membership and distance
/// comparisons carry this absolute tolerance (coordinates are O(1e3) at most).
inline constexpr double kCoordTol = 1e-9;

int sup_dist(const Site& a, const Site& b);
double sup_dist(const RealPoint& a, const RealPoint& b);
double sup_dist(const RealPoint& a, const Site& b);
double euclid_dist(const Site& a, const Site& b);

/// Box of side L centered at x in R^d; its site set is the integer points
/// within sup-distance L/2 of the center.
struct LatticeBox {
  RealPoint center;
  double side = 0.0;
  int dim = 0;

  bool contains(const Site& y) const;
  bool real_box_contains(const RealPoint& p) const;
  /// Per-axis integer bounds [lo, hi] of the site set.
  std::pair<std::vector<int>, std::vector<int>> site_bounds() const;
};

/// Finite subset of Z^d with a fixed deterministic (lexicographic) ordering.
struct SiteSet {
  int dim = 0;
  std::vector<Site> sites;  // sorted, unique

  static SiteSet from_unsorted(int dim, std::vector<Site> raw);

  std::size_t size() const { return sites.size(); }
  bool empty() const { return sites.empty(); }
  bool contains(const Site& y) const;
  /// Position in the canonical ordering, -1 if absent.
  int index_of(const Site& y) const;
  bool is_subset_of(const SiteSet& other) const;
  bool operator==(const SiteSet& other) const = default;
};

SiteSet set_union(const SiteSet& a, const SiteSet& b);
SiteSet set_difference(const SiteSet& a, const SiteSet& b);
SiteSet set_intersection(const SiteSet& a, const SiteSet& b);
/// Sup-norm diameter (max over axes of coordinate extent).
int diameter(const SiteSet& s);
/// True if s is connected under nearest-neighbor lattice adjacency.
bool lattice_connected(const SiteSet& s);

SiteSet box_sites(const LatticeBox& box);

/// Boundary of phi relative to theta: directed edges (u, v) with u in phi,
/// v in theta \ phi and |u - v|_2 = 1, plus the induced exterior/interior
/// site sets.
struct BoundaryData {
  std::vector<std::pair<Site, Site>> edges;
  SiteSet exterior;
  SiteSet interior;
};

BoundaryData boundary(const SiteSet& phi, const SiteSet& theta);

/// |edges| <= s_d L^{d-1} for a box of side L, s_d = 2^d d.
double boundary_edge_cap(double side, int dim);

/// t-interior of phi relative to theta: sites of phi at sup-distance
/// greater than floor(t) from theta \ phi. Requires t >= 1.
SiteSet t_interior(const SiteSet& phi, const SiteSet& theta, double t);
/// phi \ t_interior(phi, theta, t).
SiteSet t_inner_boundary(const SiteSet& phi, const SiteSet& theta, double t);
/// Sites of theta \ phi at sup-distance at most floor(t) from phi.
SiteSet t_exterior_boundary(const SiteSet& phi, const SiteSet& theta, double t);
/// Union of the inner and exterior t-boundaries.
SiteSet t_boundary(const SiteSet& phi, const SiteSet& theta, double t);

/// Canonical grid of side-ell boxes covering a side-L box. Centers sit on
/// x0 + rho ell^varsigma Z^d and are restricted so every child box is
/// contained in the parent; spacing counts steps per axis in {-k..k}.
struct CoverSpec {
  LatticeBox parent;
  double child_side = 0.0;
  double varsigma = 0.0;
  double rho = 0.0;
  int steps = 0;
  std::vector<RealPoint> centers;  // lexicographic

  double spacing() const;  // rho * child_side^varsigma
  LatticeBox child(int index) const;
  std::size_t center_count() const { return centers.size(); }
};

/// Builds the suitable cover. If rho_choice is omitted the maximum
/// admissible rho in [1/2, 1] of the form (L-ell)/(2 ell^varsigma k) is used.
CoverSpec suitable_cover(const LatticeBox& parent, double child_side, double varsigma,
                         std::optional<double> rho_choice = std::nullopt);

/// Index of a child box whose (ell - ell^varsigma)/2 interior relative to the
/// parent contains b; smallest lexicographic center wins.
int cover_interior_assignment(const CoverSpec& cover, const Site& b);

struct CoverCheck {
  bool union_ok = false;      // children exactly tile the parent site set
  bool interior_ok = false;   // every parent site deep inside some child
  bool count_ok = false;      // center cardinality formula exact
  bool disjoint_ok = false;   // box disjointness <=> center distance threshold
  std::string detail;
  bool all() const { return union_ok && interior_ok && count_ok && disjoint_ok; }
};

CoverCheck check_cover(const CoverSpec& cover);

/// Overlap (G1) and near-miss (G2) adjacency between cover centers.
/// G1 edges: 0 < ||a-b|| <= (k_ell - 1) rho ell^varsigma, i.e. closed real
/// boxes intersect. G2 edges: k_ell rho ell^varsigma <= ||a-b|| <=
/// 3 (k_ell - 1) rho ell^varsigma.
struct ClusterGraphs {
  int k_ell = 0;
  double g1_max = 0.0;
  double g2_min = 0.0;
  double g2_max = 0.0;
  std::vector<std::pair<int, int>> g1_edges;  // i < j, center indices
  std::vector<std::pair<int, int>> g2_edges;
};

/// Closed real boxes of the given side centered at a and b are disjoint.
bool real_boxes_disjoint(const RealPoint& a, const RealPoint& b, double side);

ClusterGraphs cluster_graphs(const std::vector<RealPoint>& centers, double rho,
                             double child_side, double varsigma);

/// Connected components of the given vertex subset under an edge list.
std::vector<std::vector<int>> connected_components(const std::vector<int>& vertices,
                                                   const std::vector<std::pair<int, int>>& edges);

/// Union of child boxes grown around a cluster of centers, clipped to the
/// parent, together with its buffer shell bookkeeping.
struct BufferedSubset {
  SiteSet region;                        // Upsilon
  std::vector<int> grown_component;      // tilde-Phi, center indices
  std::vector<int> buffer_indices;       // exterior G1 boundary of tilde-Phi
  std::vector<RealPoint> buffer_centers; // the buffer box centers
  SiteSet core;                          // region minus buffer boxes
  SiteSet buffer_interior;               // union of 2 ell_tau interiors of buffer boxes rel. region
  bool grown_g1_connected = false;
  bool connected = false;
  bool boundary_covered = false;  // inner boundary of region lies in buffer_interior
  bool level_spacing_ok = false;  // filled in by the experiment layer
  int diameter = 0;
};

/// component must be G2-connected (throws otherwise). ell_tau is the
/// localization cutoff floor(ell^tau) used for the buffer interiors.
/// The diameter bound diam <= 5 ell |component| is enforced.
BufferedSubset build_buffered_subset(const std::vector<int>& component, const CoverSpec& cover,
                                     const ClusterGraphs& graphs, int ell_tau);

}  // namespace emsa::geometry
