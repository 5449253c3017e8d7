#pragma once

#include <vector>

#include "flagpoly/polymatroid.hpp"
#include "flagpoly/subsets.hpp"

namespace flagpoly {

// Matroid given by its independent sets, stored as a dense indicator table.
// Construction validates the nonempty/hereditary/augmentation axioms and
// throws std::invalid_argument with a witnessing pair on failure.
class Matroid {
 public:
  static Matroid from_independents(GroundSet g, const std::vector<Subset>& indep);
  static Matroid from_bases(GroundSet g, const std::vector<Subset>& bases);

  int n() const { return ground_.n; }
  Subset full() const { return full_set(ground_.n); }
  const GroundSet& ground() const { return ground_; }
  bool independent(Subset a) const { return indep_[a]; }
  int rank(Subset a) const { return rank_[a]; }
  int rank() const { return rank_[full()]; }

  Polymatroid rank_polymatroid() const;
  std::vector<Subset> bases() const;
  std::vector<Subset> independents() const;

 private:
  Matroid(GroundSet g, std::vector<char> indep);
  GroundSet ground_;
  std::vector<char> indep_;
  std::vector<int> rank_;
};

Matroid uniform_matroid(int n, int k);

// Minimal sets meeting every basis.
std::vector<Subset> cocircuits(const Matroid& m);

Matroid deletion(const Matroid& m, int e);
Matroid contraction(const Matroid& m, int e);

}  // namespace flagpoly
