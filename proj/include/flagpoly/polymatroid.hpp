#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagpoly/rational.hpp"
#include "flagpoly/subsets.hpp"

namespace flagpoly {

inline constexpr int kMaxGround = 16;

struct GroundSet {
  int n = 0;
  std::vector<std::string> labels;  // size n; defaults to "1".."n"

  static GroundSet of_size(int n);
  static GroundSet with_labels(std::vector<std::string> labels);
};

struct Violation {
  std::string axiom;  // "normalized" | "nonnegative" | "monotone" | "submodular"
  Subset a = 0;
  Subset b = 0;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Normalized monotone submodular set function f : 2^E -> Q>=0 stored as a
// dense table indexed by subset bitmask. Construction checks sizes only;
// axioms are checked by validate().
class Polymatroid {
 public:
  Polymatroid(GroundSet g, std::vector<Rat> values);

  int n() const { return ground_.n; }
  Subset full() const { return full_set(ground_.n); }
  const Rat& value(Subset a) const { return values_[a]; }
  const Rat& rank() const { return values_[full()]; }
  const GroundSet& ground() const { return ground_; }
  const std::vector<Rat>& values() const { return values_; }
  std::vector<Rat>& mutable_values() { return values_; }

 private:
  GroundSet ground_;
  std::vector<Rat> values_;
};

ValidationReport validate(const Polymatroid& f);

// Largest superset of a with the same value: { e : f(a + e) = f(a) }.
Subset closure(const Polymatroid& f, Subset a);
bool is_flat(const Polymatroid& f, Subset a);

// All flats ordered by (cardinality, bitmask), with the cover relation of
// the inclusion order.
struct LatticeOfFlats {
  std::vector<Subset> flats;
  std::vector<std::vector<int>> covers;  // covers[i]: indices of flats covering flats[i]
  int index_of(Subset f) const;
};
LatticeOfFlats flats(const Polymatroid& f);

// A flat F is separable when F = F1 u F2 for disjoint nonempty flats with
// f(F) = f(F1) + f(F2).
bool is_separable_flat(const Polymatroid& f, Subset flat,
                       std::pair<Subset, Subset>* parts = nullptr);

Polymatroid truncate(const Polymatroid& f, const Rat& cap);
// Adds a new element e* with f'(A) = f(E) whenever e* is in A.
Polymatroid extend(const Polymatroid& f);
Polymatroid scale(const Polymatroid& f, const Rat& alpha);

// Normalizes to f(E) = 1, then applies t -> 2t - t^2 entrywise `steps`
// times. Entry bit-size doubles per step; intended for modest step counts.
Polymatroid iterate_flag(const Polymatroid& f, int steps);

// Decides whether every nonempty-set entry of iterate_flag(f, steps) lies
// within `bound` of 1, without materializing the iterates. Uses exact
// clamped squaring of 1/(1 - f(A)/f(E)); sound for the "within" verdict.
bool flag_iteration_within(const Polymatroid& f, int steps, const Rat& bound);

bool is_tight(const Polymatroid& f);

Polymatroid boolean_polymatroid(int n);
// Counts intervals [i,j] of [n] meeting A.
Polymatroid associahedron_polymatroid(int n);
// Counts intervals of length >= 2 meeting A; the tight variant.
Polymatroid tight_associahedron_polymatroid(int n);
// f(A) = rank of the span of the columns in the blocks indexed by A.
Polymatroid from_subspaces(const Mat& columns,
                           const std::vector<std::vector<int>>& blocks);
// Sum of the |A| largest entries of (n, n-1, ..., 1, 0, ...), on m elements.
Polymatroid top_sum_polymatroid(int m, int n);
// Extension of the uniform rank min(|A|, n) on [m] by one apex element.
Polymatroid partial_perm_rank(int m, int n);

}  // namespace flagpoly
