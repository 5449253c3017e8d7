#include "flagpoly/linprog.hpp"

#include <cassert>
#include <stdexcept>

namespace flagpoly {

void LinearProgram::add_row(const Vec& a, Rel rel, const Rat& b) {
  if (a.size() != num_vars) throw std::invalid_argument("row size mismatch");
  row_coeffs.push_back(a);
  row_rels.push_back(rel);
  row_rhs.push_back(b);
}

namespace {

// Tableau in standard form: columns 0..2d-1 split each free variable into a
// difference of nonnegatives, followed by slack and artificial columns, and
// a trailing right-hand-side column.
struct Tableau {
  Mat t;                    // m x (ncols + 1)
  std::vector<int> basis;   // basis[i] = column basic in row i
  std::vector<char> dead;   // columns barred from entering
  int ncols = 0;

  void pivot(int pr, int pc) {
    Rat piv = t(pr, pc);
    assert(piv != 0);
    t.row(pr) /= piv;
    for (int i = 0; i < t.rows(); ++i) {
      if (i == pr) continue;
      Rat f = t(i, pc);
      if (f != 0) t.row(i) -= f * t.row(pr);
    }
    basis[pr] = pc;
  }
};

// Runs Bland-rule simplex for "maximize", mutating the reduced-cost row obj
// alongside the tableau. Returns false when unbounded.
bool simplex(Tableau& tab, Vec& obj) {
  const int m = static_cast<int>(tab.t.rows());
  while (true) {
    int enter = -1;
    for (int j = 0; j < tab.ncols; ++j) {
      if (!tab.dead[j] && obj(j) > 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return true;
    int leave = -1;
    Rat best_num = 0, best_den = 1;
    for (int i = 0; i < m; ++i) {
      const Rat& a = tab.t(i, enter);
      if (a > 0) {
        const Rat& b = tab.t(i, tab.ncols);
        // compare b/a with best_num/best_den
        bool better = leave < 0 || b * best_den < best_num * a ||
                      (b * best_den == best_num * a && tab.basis[i] < tab.basis[leave]);
        if (better) {
          leave = i;
          best_num = b;
          best_den = a;
        }
      }
    }
    if (leave < 0) return false;
    Rat f = obj(enter);
    tab.pivot(leave, enter);
    obj -= f * tab.t.row(leave).transpose();
    obj(enter) = 0;
  }
}

// Prices out the basis from a raw cost vector to obtain reduced costs.
Vec reduced_costs(const Tableau& tab, const Vec& raw) {
  Vec obj = raw;
  for (int i = 0; i < tab.t.rows(); ++i) {
    Rat f = obj(tab.basis[i]);
    if (f != 0) obj -= f * tab.t.row(i).transpose();
  }
  return obj;
}

}  // namespace

LpResult lp_solve(const LinearProgram& lp) {
  const int d = lp.num_vars;
  const int m = static_cast<int>(lp.row_coeffs.size());

  int nslack = 0;
  for (Rel r : lp.row_rels)
    if (r != Rel::Eq) ++nslack;

  // Normalize rows to nonnegative rhs, then count artificials: one per row
  // whose slack cannot serve as the initial basic variable.
  std::vector<Vec> rows(lp.row_coeffs);
  std::vector<Rel> rels(lp.row_rels);
  std::vector<Rat> rhs(lp.row_rhs);
  for (int i = 0; i < m; ++i) {
    if (rhs[i] < 0) {
      rows[i] = -rows[i];
      rhs[i] = -rhs[i];
      rels[i] = rels[i] == Rel::Le ? Rel::Ge : (rels[i] == Rel::Ge ? Rel::Le : Rel::Eq);
    }
  }
  int nart = 0;
  for (Rel r : rels)
    if (r != Rel::Le) ++nart;

  Tableau tab;
  tab.ncols = 2 * d + nslack + nart;
  tab.t = Mat::Zero(m, tab.ncols + 1);
  tab.basis.assign(m, -1);
  tab.dead.assign(tab.ncols, 0);
  const int art0 = 2 * d + nslack;

  int si = 0, ai = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < d; ++j) {
      tab.t(i, j) = rows[i](j);
      tab.t(i, d + j) = -rows[i](j);
    }
    tab.t(i, tab.ncols) = rhs[i];
    if (rels[i] != Rel::Eq) {
      tab.t(i, 2 * d + si) = rels[i] == Rel::Le ? Rat(1) : Rat(-1);
      if (rels[i] == Rel::Le) tab.basis[i] = 2 * d + si;
      ++si;
    }
    if (rels[i] != Rel::Le) {
      tab.t(i, art0 + ai) = 1;
      tab.basis[i] = art0 + ai;
      ++ai;
    }
  }

  LpResult res;

  if (nart > 0) {
    Vec raw = Vec::Zero(tab.ncols + 1);
    for (int j = art0; j < tab.ncols; ++j) raw(j) = -1;
    Vec obj = reduced_costs(tab, raw);
    bool bounded = simplex(tab, obj);
    assert(bounded);
    (void)bounded;
    Rat infeas = 0;
    for (int i = 0; i < m; ++i)
      if (tab.basis[i] >= art0) infeas += tab.t(i, tab.ncols);
    if (infeas > 0) {
      res.status = LpStatus::Infeasible;
      return res;
    }
    // Degenerate basic artificials: pivot them out or drop redundant rows.
    std::vector<int> keep;
    for (int i = 0; i < m; ++i) {
      if (tab.basis[i] < art0) {
        keep.push_back(i);
        continue;
      }
      int col = -1;
      for (int j = 0; j < art0; ++j) {
        if (!tab.dead[j] && tab.t(i, j) != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        tab.pivot(i, col);
        keep.push_back(i);
      }
      // else: redundant row, dropped below
    }
    if (static_cast<int>(keep.size()) < m) {
      Mat nt(keep.size(), tab.ncols + 1);
      std::vector<int> nb;
      for (size_t k = 0; k < keep.size(); ++k) {
        nt.row(k) = tab.t.row(keep[k]);
        nb.push_back(tab.basis[keep[k]]);
      }
      tab.t = std::move(nt);
      tab.basis = std::move(nb);
    }
    for (int j = art0; j < tab.ncols; ++j) tab.dead[j] = 1;
  }

  Vec raw = Vec::Zero(tab.ncols + 1);
  for (int j = 0; j < d; ++j) {
    raw(j) = lp.objective(j);
    raw(d + j) = -lp.objective(j);
  }
  Vec obj = reduced_costs(tab, raw);
  if (!simplex(tab, obj)) {
    res.status = LpStatus::Unbounded;
    return res;
  }

  Vec xsplit = Vec::Zero(tab.ncols);
  for (int i = 0; i < tab.t.rows(); ++i) xsplit(tab.basis[i]) = tab.t(i, tab.ncols);
  res.x = Vec::Zero(d);
  for (int j = 0; j < d; ++j) res.x(j) = xsplit(j) - xsplit(d + j);
  res.value = lp.objective.dot(res.x);
  res.status = LpStatus::Optimal;
  return res;
}

std::optional<Vec> strict_feasible(
    const std::vector<Vec>& strict, int dim,
    const std::vector<std::pair<Vec, Rat>>& equalities) {
  LinearProgram lp(dim + 1);
  lp.objective(dim) = 1;  // common slack t
  for (const Vec& a : strict) {
    if (a.size() != dim) throw std::invalid_argument("strict row size mismatch");
    Vec row(dim + 1);
    row.head(dim) = a;
    row(dim) = -1;
    lp.add_row(row, Rel::Ge, Rat(0));
  }
  for (const auto& [e, b] : equalities) {
    if (e.size() != dim) throw std::invalid_argument("equality row size mismatch");
    Vec row = Vec::Zero(dim + 1);
    row.head(dim) = e;
    lp.add_row(row, Rel::Eq, b);
  }
  for (int j = 0; j <= dim; ++j) {
    // Box constraints; the cap on t itself keeps the program bounded even
    // when `strict` is empty.
    Vec row = Vec::Zero(dim + 1);
    row(j) = 1;
    lp.add_row(row, Rel::Le, Rat(1));
    if (j < dim) {
      row(j) = -1;
      lp.add_row(row, Rel::Le, Rat(1));
    }
  }
  LpResult r = lp_solve(lp);
  if (r.status != LpStatus::Optimal || r.value <= 0) return std::nullopt;
  Vec w = r.x.head(dim);
  for (const Vec& a : strict)
    if (!(a.dot(w) > 0)) throw std::logic_error("strict witness failed re-check");
  for (const auto& [e, b] : equalities)
    if (e.dot(w) != b) throw std::logic_error("equality witness failed re-check");
  return w;
}

}  // namespace flagpoly
