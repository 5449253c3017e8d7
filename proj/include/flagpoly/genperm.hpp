#pragma once

#include <vector>

#include "flagpoly/polymatroid.hpp"
#include "flagpoly/polytope.hpp"

namespace flagpoly {

// All linear orders of {0,..,n-1}, lexicographically. Desk scale: n <= 8.
std::vector<std::vector<int>> all_orders(int n);

// Generic weight in the open chamber of an order: order[i] gets n - i.
Vec order_weight(const std::vector<int>& order, int n);

// Submodular set function z with z(empty) = 0; encodes the polytope
//   { x : sum_A x <= z(A), sum_E x = z(E) },
// whose vertices the greedy rule enumerates order by order.
class GenPerm {
 public:
  GenPerm(GroundSet ground, std::vector<Rat> values);
  static GenPerm from_polymatroid(const Polymatroid& f);

  int n() const { return ground_.n; }
  Subset full() const { return full_set(ground_.n); }
  const Rat& value(Subset a) const { return values_[a]; }
  const GroundSet& ground() const { return ground_; }
  const std::vector<Rat>& values() const { return values_; }

 private:
  GroundSet ground_;
  std::vector<Rat> values_;
};

// Convex hull of the permutations of (1, ..., n): z(A) = sum of the |A|
// largest values.
GenPerm standard_permutahedron(int n);

GenPerm operator+(const GenPerm& a, const GenPerm& b);  // Minkowski sum
GenPerm dilate(const GenPerm& a, const Rat& s);         // s >= 0
GenPerm translate(const GenPerm& a, const Vec& t);

// x[order[i]] = z(first i+1 elements) - z(first i elements).
Vec greedy_vertex(const GenPerm& z, const std::vector<int>& order);
// Maximizes w . x: sorts by weight, breaking ties toward smaller elements.
Vec greedy_max_vertex(const GenPerm& z, const Vec& w);

// Every vertex with an exact chamber certificate, plus certified edges
// restricted to adjacent-transposition wall candidates.
VPolytope to_vpolytope(const GenPerm& z);

// The map (linear order) -> (optimal vertex), recorded for all n! orders.
// Two polytopes have the same normal fan iff the induced partitions of the
// orders agree, and one fan refines another iff its partition does.
struct Fingerprint {
  int n = 0;
  std::vector<Vec> vertices;       // sorted, deduplicated
  std::vector<int> chamber_vertex; // indexed by lexicographic order rank
};

Fingerprint fingerprint_of(const GenPerm& z);

// Same map computed from an arbitrary point cloud. Certifies the vertex set,
// then insists every edge direction is parallel to some e_i - e_j (so the
// normal fan coarsens the chamber fan and per-order optima are unique).
Fingerprint fingerprint_of_points(const std::vector<Vec>& points);

bool same_partition(const Fingerprint& a, const Fingerprint& b);
bool partition_refines(const Fingerprint& fine, const Fingerprint& coarse);

inline bool normal_equivalent(const Fingerprint& a, const Fingerprint& b) {
  return same_partition(a, b);
}
// q is a weak Minkowski summand of p iff p's fan refines q's.
inline bool weak_summand(const Fingerprint& q, const Fingerprint& p) {
  return partition_refines(p, q);
}

}  // namespace flagpoly
