#pragma once

#include <optional>
#include <vector>

#include "flagpoly/linprog.hpp"
#include "flagpoly/rational.hpp"

namespace flagpoly {

bool vec_less(const Vec& a, const Vec& b);
bool vec_eq(const Vec& a, const Vec& b);

// Certifies p = cloud[p_idx] extreme in conv(cloud): returns w with
// <w, p - q> > 0 for every other point q, or nullopt. Cutting-plane loop
// over exact LPs; every returned witness is re-checked by evaluation.
std::optional<Vec> vertex_witness(const std::vector<Vec>& cloud, int p_idx);

// Certifies [u, v] a face: w with <w, u - v> = 0, <w, u - x> > 0 otherwise.
std::optional<Vec> edge_witness(const std::vector<Vec>& cloud, int u_idx, int v_idx);

struct EdgeCert {
  int a = 0, b = 0;  // vertex indices, a < b
  Vec witness;
};

struct LpMaxResult {
  Rat value;
  std::vector<int> argmax;
};
LpMaxResult lp_max(const std::vector<Vec>& points, const Vec& w);

// Polytope as the convex hull of finitely many rational points; vertices
// carry exact separating witnesses, edges exact supporting witnesses.
class VPolytope {
 public:
  // Dedupes, sorts and LP-certifies; non-extreme input points are dropped.
  static VPolytope from_points(std::vector<Vec> pts);
  // Trusts the caller that `verts` are pairwise distinct extreme points and
  // that certs[i] strictly separates verts[i]; both are verified by
  // evaluation (cheap), not by LP.
  static VPolytope from_vertices(std::vector<Vec> verts, std::vector<Vec> certs);

  int ambient_dim() const { return verts_.empty() ? 0 : static_cast<int>(verts_[0].size()); }
  int dim() const;  // affine dimension
  const std::vector<Vec>& vertices() const { return verts_; }
  const Vec& vertex_certificate(int i) const { return certs_[i]; }

  // All edges, each LP-certified. Candidate pairs may be restricted by the
  // caller (they must cover all edges); all pairs are tried by default.
  const std::vector<EdgeCert>& edges() const;
  void set_edge_candidates(std::vector<std::pair<int, int>> cand);
  std::vector<std::vector<int>> adjacency() const;

  bool is_simple() const;

 private:
  std::vector<Vec> verts_;
  std::vector<Vec> certs_;
  mutable std::optional<std::vector<EdgeCert>> edges_;
  std::optional<std::vector<std::pair<int, int>>> edge_candidates_;
  mutable int dim_ = -2;
};

VPolytope minkowski_sum(const VPolytope& a, const VPolytope& b);
VPolytope minkowski_sum(const std::vector<VPolytope>& parts);

// Face lattice via supporting-hyperplane enumeration over vertex subsets
// followed by closure under intersection. Desk scale only; throws when the
// search space is too large.
struct FaceLattice {
  int dim = 0;
  std::vector<std::vector<int>> faces;  // sorted vertex index sets, includes the polytope
  std::vector<int> face_dim;
  std::vector<long> f_vector() const;  // counts in dims 0 .. dim-1
};
FaceLattice face_lattice(const VPolytope& p);

// Builds the lattice from a known facet list (vertex index sets).
FaceLattice face_lattice_from_facets(const VPolytope& p,
                                     const std::vector<std::vector<int>>& facets);

// Exact normal-fan comparison of two polytopes via vertex/edge witnesses and
// cone-containment LPs.
bool normal_fan_refines_lp(const VPolytope& fine, const VPolytope& coarse);
bool normal_equivalent_lp(const VPolytope& p, const VPolytope& q);

}  // namespace flagpoly
