#pragma once

#include <vector>

#include "flagpoly/genperm.hpp"
#include "flagpoly/polymatroid.hpp"
#include "flagpoly/polytope.hpp"

namespace flagpoly {

struct GreedyRun {
  Vec x;
  std::vector<int> order;  // elements in the order they were assigned
  Rat value;               // w . x
};

// Maximizes w . x over the base polytope: processes elements by decreasing
// weight (ties toward the smaller element) and assigns marginal values.
GreedyRun greedy_base_vertex(const Polymatroid& f, const Vec& w);

// Maximizes w . x over the independence polytope: as above but stops once
// weights turn nonpositive; unprocessed coordinates stay 0.
GreedyRun greedy_independence_vertex(const Polymatroid& f, const Vec& w);

VPolytope base_vpolytope(const Polymatroid& f);
VPolytope independence_vpolytope(const Polymatroid& f);

// A greedy path: starting from the flat cl(empty), repeatedly pick j outside
// the current flat F and move to cl(F + j). The chosen elements form the
// sequence; the flats (including the start) are kept alongside.
struct GreedyPath {
  std::vector<int> sequence;
  std::vector<Subset> flats;  // flats[0] = cl(empty), flats[k] = E
};

bool operator==(const GreedyPath& a, const GreedyPath& b);

// Runs the flat-closure process over the listed elements, keeping j exactly
// when it increases f on the current flat; throws unless the result reaches
// the full ground set.
GreedyPath canonicalize_sequence(const Polymatroid& f, const std::vector<int>& seq);

// Greedy path selected by a weight vector with pairwise-distinct entries.
GreedyPath greedy_path(const Polymatroid& f, const Vec& w);

// All greedy paths, in lexicographic order of their sequences.
std::vector<GreedyPath> enumerate_greedy_paths(const Polymatroid& f);

// The point carried by a greedy path: element j_i receives
//   (f(F_i) - f(F_{i-1})) * (2 f(E) - f(F_i) - f(F_{i-1})),
// all other coordinates 0. Coordinates always sum to f(E)^2.
Vec path_vertex(const Polymatroid& f, const GreedyPath& p);

// Paths one exchange move away: insert an absorbed element right before the
// step that absorbed it, or swap two consecutive chosen elements; both are
// re-canonicalized. Sorted and deduplicated, excludes p itself.
std::vector<GreedyPath> path_neighbors(const Polymatroid& f, const GreedyPath& p);

}  // namespace flagpoly
