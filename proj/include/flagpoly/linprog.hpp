#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "flagpoly/rational.hpp"

namespace flagpoly {

enum class Rel { Le, Eq, Ge };

// Dense exact linear program: maximize objective . x over free variables x
// subject to the listed rows. Solved by a two-phase primal simplex with
// Bland's rule, entirely in rational arithmetic.
struct LinearProgram {
  int num_vars = 0;
  Vec objective;
  std::vector<Vec> row_coeffs;
  std::vector<Rel> row_rels;
  std::vector<Rat> row_rhs;

  explicit LinearProgram(int nv) : num_vars(nv), objective(Vec::Zero(nv)) {}
  void add_row(const Vec& a, Rel rel, const Rat& b);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value = 0;
  Vec x;
};

LpResult lp_solve(const LinearProgram& lp);

// Decides feasibility of the strict homogeneous system  a . w > 0  for all
// a in `strict`, with optional affine side conditions  e . w == rhs.  The
// search runs over the box |w_j| <= 1 by maximizing the common slack; a
// witness is returned iff the attainable slack is positive.  Witnesses are
// re-checked by exact evaluation before being returned.
std::optional<Vec> strict_feasible(
    const std::vector<Vec>& strict, int dim,
    const std::vector<std::pair<Vec, Rat>>& equalities = {});

}  // namespace flagpoly
