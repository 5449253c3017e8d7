#pragma once
// Building sets, weighted nestohedra, nested-set complexes, and the
// marked-chain encoding of the forests attached to a union-closed family.

#include <vector>

#include "flagpoly/genperm.hpp"
#include "flagpoly/greedy.hpp"
#include "flagpoly/polymatroid.hpp"

namespace flagpoly {

// A building set on a ground set: nonempty members such that any two
// intersecting members have their union in the family. Each member carries a
// positive weight (the dilation of its simplex summand); weights default to 1.
struct BuildingSet {
  GroundSet ground;
  std::vector<Subset> members;  // sorted by (size, mask), distinct
  std::vector<Rat> weights;     // parallel to members, all > 0
};

BuildingSet make_building_set(GroundSet ground, std::vector<Subset> members,
                              std::vector<Rat> weights = {});

// Whether every union of two members is again a member.
bool is_union_closed(const BuildingSet& b);

// Complements of the proper flats of f, with unit weights. This family is
// union-closed (flats are closed under intersection) and never meets the
// closure of the empty set.
BuildingSet uc_building_set(const Polymatroid& f);

// The union-closed family on [m+1] whose nestohedron realizes the partial
// permutahedron P(m,n): sets S + {m+1} with S a subset of [m] of size > m-n,
// together with {m+1} itself. The singleton member only translates the
// polytope; uc_building_set of the matching rank table omits it.
BuildingSet partial_perm_building_set(int m, int n);

// Two counts attached to a flat F of f:
//  - chain_formula: the sum over saturated flat chains closure({}) = F_0 <
//    F_1 < ... < F_l < F of the products |F_1 - F_0| ... |F_{l-1} - F_{l-2}|
//    (empty products count 1; F = closure({}) gives 1);
//  - vertex_count: the number of vertices v of the independence polytope of f
//    outside the base polytope with closure(support(v)) = F.
// The two disagree in general (boolean ground of size 3, F a doubleton:
// 2 vs 1); decompositions below use vertex_count.
struct RhoValue {
  long chain_formula = 0;
  long vertex_count = 0;
};
RhoValue rho(const Polymatroid& f, Subset flat);

// Weighted nestohedron: the Minkowski sum of weight-dilated simplices
// conv{e_i : i in S} over the members, as the submodular table
// z(A) = sum of weights of members meeting A.
GenPerm nestohedron(const BuildingSet& b);

// Nested sets of B live in B~ = members + all singletons of the ground set:
// (N1) any two picked sets are nested or disjoint, (N2) no two or more
// pairwise disjoint picked sets have their union in B~, (N3) every
// inclusion-maximal member of B~ is picked. A nested set of size s labels the
// face of dimension |ground| - s of the nestohedron; nested_sets returns the
// inclusion-maximal ones (the vertices), all_nested_sets every one.
std::vector<std::vector<Subset>> nested_sets(const BuildingSet& b);
std::vector<std::vector<Subset>> all_nested_sets(const BuildingSet& b);

// Checks the face correspondence numerically: the faces of nestohedron(b) in
// each dimension d are counted by the nested sets of size |ground| - d, the
// polytope itself included.
bool nested_set_complex_anti_iso_check(const BuildingSet& b);

// A forest on the ground set, encoded by the parent map (-1 at roots). The
// descendant sets d(i) of a valid forest for a building set B satisfy:
//  (F1) every d(i) lies in B~;
//  (F2) no two or more pairwise incomparable d(i) union to a member of B~;
//  (F3) every inclusion-maximal member of B~ equals some d(i).
struct BForest {
  std::vector<int> parent;
};

// d(i) = i together with everything below it; throws on a cyclic parent map.
std::vector<Subset> descendants(const BForest& t);

// Throws invalid_argument naming the violated axiom.
void validate_bforest(const BuildingSet& b, const BForest& t);

// All valid forests, recovered from the maximal nested sets.
std::vector<BForest> bforests(const BuildingSet& b);

// A strictly increasing chain S_1 < ... < S_k of members ending at the full
// ground set, with a mark t_i in S_i - S_{i-1} for each step, such that no
// nonempty R disjoint from S_i and the later marks has S_i + R in the family.
struct MarkedChain {
  std::vector<Subset> chain;
  std::vector<int> marks;
};

// Throws invalid_argument naming the violated condition. Requires b to be
// union-closed and to cover its ground set.
void validate_marked_chain(const BuildingSet& b, const MarkedChain& c);

// Mutually inverse encodings for a union-closed b covering its ground set.
// The marks of a forest are exactly the nodes whose descendant set is a
// member; the forest of a chain hangs t_i below t_{i+1} and the remaining
// elements of S_i - S_{i-1} below t_i as leaves.
MarkedChain bforest_to_marked_chain(const BuildingSet& b, const BForest& t);
BForest marked_chain_to_bforest(const BuildingSet& b, const MarkedChain& c);

// Marked chains of uc_building_set(f) are greedy paths read backwards:
// S_i is the complement of the path flat F_{k-i} and t_i the letter
// j_{k-i+1}. Requires closure({}) empty so that the family covers the ground.
MarkedChain marked_chain_from_greedy_path(const Polymatroid& f,
                                          const GreedyPath& p);
GreedyPath greedy_path_from_marked_chain(const Polymatroid& f,
                                         const MarkedChain& c);

}  // namespace flagpoly
