#pragma once
// Monotone paths on V-polytopes: enumeration, coherence certificates,
// monotone path polytopes via fiber sums, and max-slope pivot machinery.

#include <optional>
#include <vector>

#include "flagpoly/polytope.hpp"

namespace flagpoly {

// A c-monotone vertex walk, stored as indices into the polytope's vertex
// list.  Valid paths start on the c-minimal face, end on the c-maximal face,
// and follow certified edges with strictly increasing objective value.
struct MonotonePath {
  std::vector<int> vertices;
};

bool operator==(const MonotonePath& a, const MonotonePath& b);

// Vertex indices of the face of p maximizing (sign > 0) or minimizing
// (sign < 0) the objective.
std::vector<int> extreme_face(const VPolytope& p, const Vec& c, int sign);

// Certified neighbors u of vertex v with <c,u> > <c,v>, ascending by index.
std::vector<int> improving_neighbors(const VPolytope& p, const Vec& c, int v);

// All c-monotone paths, ordered lexicographically by index sequence.
// Throws std::invalid_argument when c is constant on p.
std::vector<MonotonePath> enumerate_monotone_paths(const VPolytope& p,
                                                   const Vec& c);

// Shadow-vertex certificate: a weight w making v_0 the unique maximizer of w
// on the c-minimal face and every step the unique best-slope improving move.
// Returns a witness iff the path is coherent; throws on malformed paths.
std::optional<Vec> is_coherent(const VPolytope& p, const Vec& c,
                               const MonotonePath& path);

// Sum over steps of <c, v_j - v_{j-1}> (v_{j-1} + v_j).
Vec path_point(const VPolytope& p, const Vec& c, const MonotonePath& path);

// Minkowski sum of the slices of p at all levels of c attained at vertices.
// Requires every slice to be spanned by vertices of p: refuses when a level
// cuts the interior of some edge's value interval, or when c is constant.
VPolytope mpp(const VPolytope& p, const Vec& c);

// next[v] = v exactly on the c-maximal face; elsewhere the improving
// neighbor maximizing <w, u-v>/<c, u-v>.
struct Arborescence {
  std::vector<int> next;
};

// Throws std::invalid_argument when some vertex sees a tied best slope (w is
// then non-generic) or when c is constant on p.
Arborescence max_slope_arborescence(const VPolytope& p, const Vec& c,
                                    const Vec& w);

// Sum over vertices v off the c-maximal face of (A(v) - v)/<c, A(v) - v>.
Vec arborescence_point(const VPolytope& p, const Vec& c,
                       const Arborescence& a);

// Minkowski sum over vertices v off the c-maximal face of
// conv{ (u - v)/<c, u - v> : u improving neighbor of v }.
VPolytope pivot_polytope(const VPolytope& p, const Vec& c);

// Coefficients c of v = sum_j c_j S_j, where S_j is the sum of all standard
// simplices on j of n coordinates and v is the vertex of the sum maximizing
// (1, 2, ..., n): solves the unitriangular system M c = v with
// M_ij = binom(i-1, j-1).  Requires v weakly increasing and nonnegative.
Vec symmetrized_simplex_decomposition(const Vec& v);

}  // namespace flagpoly
