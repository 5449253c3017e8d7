#pragma once
// Flag polymatroids f -> 2 f(E) f - f^2, facet descriptions of their base
// polytopes, rank-selected independence polytopes, flag matroid polytopes,
// and partial permutahedra.

#include <utility>
#include <vector>

#include "flagpoly/genperm.hpp"
#include "flagpoly/matroid.hpp"
#include "flagpoly/polymatroid.hpp"
#include "flagpoly/polytope.hpp"

namespace flagpoly {

struct FlagPolymatroid {
  Polymatroid base;
  Polymatroid flag;  // A -> 2 f(E) f(A) - f(A)^2
};

// The flag table has the same flats as f, all of them inseparable, and its
// base polytope is the monotone path polytope of the independence polytope
// of f for the all-ones objective.
FlagPolymatroid flag_polymatroid(const Polymatroid& f);

// Irredundant description of the base polytope of flag(f) inside the
// hyperplane 1(x) = f(E)^2:
//   x(F) <= 2 f(E) f(F) - f(F)^2  for each listed proper flat F,
//   x_i  >= 0                     for each listed coordinate i.
// Candidates are kept exactly when their tight vertex set spans a facet
// (affine dimension dim - 1); coordinate bounds duplicating a flat facet
// are dropped in favor of the flat form.
struct FlagFacets {
  Rat total;  // value of 1(x) on the polytope
  std::vector<std::pair<Subset, Rat>> flat_bounds;
  std::vector<int> nonneg;
};
FlagFacets mpp_facets(const Polymatroid& f);

// Convex hull of the indicators of independent sets whose size appears in
// `ranks` (a strictly increasing selection from 0..rank(M)).
struct RankSelected {
  std::vector<Subset> sets;  // vertex i of poly is the indicator of sets[i]
  VPolytope poly;
};
RankSelected rank_selected_vertices(const Matroid& m,
                                    const std::vector<int>& ranks);

// Edges of the rank-selected polytope split by endpoint size. Increasing
// edges are exactly the containments I c J between consecutive selected
// ranks; the containment rule is re-checked against the edge oracle.
struct RankSelectedEdges {
  std::vector<std::pair<int, int>> increasing;  // indices into sets
  std::vector<std::pair<int, int>> level;
};
RankSelectedEdges rank_selected_edges(const Matroid& m,
                                      const std::vector<int>& ranks);

// Minkowski sum of the base polytopes of the truncations of M to each
// selected rank, as a submodular table.
GenPerm flag_matroid_polytope(const Matroid& m, const std::vector<int>& ranks);

struct PartialPermutahedron {
  int m = 0, n = 0;
  VPolytope poly;  // in R^m
};

// Convex hull of all points in {0,...,n}^m whose nonzero entries are
// pairwise distinct. Vertices have k zero entries, max(m-n,0) <= k <= m,
// and the remaining entries a permutation of {n, n-1, ..., n-(m-k)+1}.
PartialPermutahedron partial_permutahedron(int m, int n);

// The copy of P(m,n) in the hyperplane 1(y) = n(n+1)/2 of R^{m+1}, namely
// y = (x, n(n+1)/2 - 1(x)).
VPolytope embedded_partial_permutahedron(const PartialPermutahedron& p);

// Number of k-dimensional faces of P(m,n) for m >= n >= 1, counted as flags
// of subsets of [m]: chains T_1 c ... c T_l (the empty set may appear as the
// bottom member) whose nonempty members' sizes differ by at most n-1, with
// exactly k sizes missing from {0, ..., |T_l|}.
long heuer_striker_count(int m, int n, int k);

}  // namespace flagpoly
