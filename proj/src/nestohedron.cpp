#include "flagpoly/nestohedron.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace flagpoly {

namespace {

bool size_mask_less(Subset a, Subset b) {
  return std::pair(popcount(a), a) < std::pair(popcount(b), b);
}

bool in_family(const std::vector<Subset>& sorted, Subset s) {
  return std::binary_search(sorted.begin(), sorted.end(), s, size_mask_less);
}

// Members plus all singletons of the ground set, sorted by (size, mask).
std::vector<Subset> augmented(const BuildingSet& b) {
  std::vector<Subset> out = b.members;
  for (int i = 0; i < b.ground.n; ++i) out.push_back(Subset(1) << i);
  std::sort(out.begin(), out.end(), size_mask_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Subset> inclusion_maximal(const std::vector<Subset>& fam) {
  std::vector<Subset> out;
  for (Subset s : fam) {
    bool covered = false;
    for (Subset t : fam)
      if (t != s && (s & ~t) == 0) {
        covered = true;
        break;
      }
    if (!covered) out.push_back(s);
  }
  return out;
}

bool nested_or_disjoint(Subset s, Subset t) {
  const Subset meet = s & t;
  return meet == 0 || meet == s || meet == t;
}

// Whether chosen + {s} still satisfies (N1) and (N2); chosen is assumed
// valid, so only constraints involving s are examined.
bool can_add(const std::vector<Subset>& tilde, const std::vector<Subset>& chosen,
             Subset s) {
  std::vector<Subset> apart;
  for (Subset t : chosen) {
    if (t == s || !nested_or_disjoint(s, t)) return false;
    if ((t & s) == 0) apart.push_back(t);
  }
  bool bad = false;
  auto grow = [&](auto&& self, std::size_t idx, Subset uni, bool grown) -> void {
    if (bad) return;
    if (grown && in_family(tilde, uni)) {
      bad = true;
      return;
    }
    for (std::size_t j = idx; j < apart.size() && !bad; ++j)
      if ((apart[j] & uni) == 0) self(self, j + 1, uni | apart[j], true);
  };
  grow(grow, 0, s, false);
  return !bad;
}

void require_union_closed_cover(const BuildingSet& b) {
  if (!is_union_closed(b))
    throw std::invalid_argument("family is not union-closed");
  Subset uni = 0;
  for (Subset s : b.members) uni |= s;
  if (uni != full_set(b.ground.n))
    throw std::invalid_argument("family does not cover the ground set");
}

}  // namespace

BuildingSet make_building_set(GroundSet ground, std::vector<Subset> members,
                              std::vector<Rat> weights) {
  if (ground.n < 1 || ground.n > kMaxGround)
    throw std::invalid_argument("ground set size out of range");
  if (members.empty())
    throw std::invalid_argument("building set needs at least one member");
  if (weights.empty()) weights.assign(members.size(), Rat(1));
  if (weights.size() != members.size())
    throw std::invalid_argument("one weight per member required");

  std::vector<std::size_t> idx(members.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    return size_mask_less(members[i], members[j]);
  });

  BuildingSet b;
  b.ground = std::move(ground);
  const Subset full = full_set(b.ground.n);
  for (std::size_t i : idx) {
    const Subset s = members[i];
    if (s == 0) throw std::invalid_argument("the empty set cannot be a member");
    if ((s & ~full) != 0)
      throw std::invalid_argument("member is not a subset of the ground set");
    if (!b.members.empty() && b.members.back() == s)
      throw std::invalid_argument("duplicate member " + subset_to_string(s));
    if (weights[i] <= 0)
      throw std::invalid_argument("weight of member " + subset_to_string(s) +
                                  " must be positive");
    b.members.push_back(s);
    b.weights.push_back(weights[i]);
  }

  for (std::size_t i = 0; i < b.members.size(); ++i)
    for (std::size_t j = i + 1; j < b.members.size(); ++j) {
      const Subset s = b.members[i], t = b.members[j];
      if ((s & t) != 0 && !in_family(b.members, s | t))
        throw std::invalid_argument(
            "members " + subset_to_string(s) + " and " + subset_to_string(t) +
            " intersect but their union is not a member");
    }
  return b;
}

bool is_union_closed(const BuildingSet& b) {
  for (std::size_t i = 0; i < b.members.size(); ++i)
    for (std::size_t j = i + 1; j < b.members.size(); ++j)
      if (!in_family(b.members, b.members[i] | b.members[j])) return false;
  return true;
}

BuildingSet uc_building_set(const Polymatroid& f) {
  const Subset full = f.full();
  std::vector<Subset> members;
  for (Subset a : flats(f).flats)
    if (a != full) members.push_back(full & ~a);
  BuildingSet b = make_building_set(f.ground(), std::move(members));
  if (!is_union_closed(b))
    throw std::logic_error("complements of flats failed to be union-closed");
  return b;
}

BuildingSet partial_perm_building_set(int m, int n) {
  if (m < 1 || n < 1 || m + 1 > kMaxGround)
    throw std::invalid_argument("partial permutahedron parameters out of range");
  const Subset apex = Subset(1) << m;
  std::vector<Subset> members{apex};
  for (Subset s = 1; s < full_set(m) + 1u; ++s)
    if (popcount(s) > m - n) members.push_back(s | apex);
  return make_building_set(GroundSet::of_size(m + 1), std::move(members));
}

RhoValue rho(const Polymatroid& f, Subset flat) {
  if (!is_flat(f, flat))
    throw std::invalid_argument("rho expects a flat of the polymatroid");
  RhoValue out;

  const LatticeOfFlats lf = flats(f);
  if (flat == lf.flats[0]) {
    out.chain_formula = 1;
  } else {
    auto walk = [&](auto&& self, int cur, long prod, int last) -> void {
      for (int nxt : lf.covers[cur]) {
        const Subset g = lf.flats[nxt];
        if ((g & ~flat) != 0) continue;
        if (g == flat) {
          out.chain_formula += prod;
          continue;
        }
        self(self, nxt, prod * (last > 0 ? last : 1),
             popcount(g) - popcount(lf.flats[cur]));
      }
    };
    walk(walk, 0, 1, 0);
  }

  const VPolytope p = independence_vpolytope(f);
  for (const Vec& v : p.vertices()) {
    Subset supp = 0;
    Rat total(0);
    for (int i = 0; i < f.n(); ++i) {
      if (v[i] != 0) supp = with(supp, i);
      total += v[i];
    }
    if (total == f.rank()) continue;
    if (closure(f, supp) == flat) ++out.vertex_count;
  }
  return out;
}

GenPerm nestohedron(const BuildingSet& b) {
  for (const Rat& y : b.weights)
    if (y <= 0) throw std::invalid_argument("nestohedron weights must be positive");
  std::vector<Rat> z(std::size_t(1) << b.ground.n, Rat(0));
  for (Subset a = 1; a < Subset(z.size()); ++a)
    for (std::size_t i = 0; i < b.members.size(); ++i)
      if ((b.members[i] & a) != 0) z[a] += b.weights[i];
  return GenPerm(b.ground, std::move(z));
}

std::vector<std::vector<Subset>> all_nested_sets(const BuildingSet& b) {
  const std::vector<Subset> tilde = augmented(b);
  const std::vector<Subset> required = inclusion_maximal(tilde);
  std::vector<Subset> optional;
  for (Subset s : tilde)
    if (std::find(required.begin(), required.end(), s) == required.end())
      optional.push_back(s);

  std::vector<std::vector<Subset>> out;
  std::vector<Subset> chosen = required;
  auto dfs = [&](auto&& self, std::size_t idx) -> void {
    std::vector<Subset> rec = chosen;
    std::sort(rec.begin(), rec.end(), size_mask_less);
    out.push_back(std::move(rec));
    for (std::size_t j = idx; j < optional.size(); ++j)
      if (can_add(tilde, chosen, optional[j])) {
        chosen.push_back(optional[j]);
        self(self, j + 1);
        chosen.pop_back();
      }
  };
  dfs(dfs, 0);

  std::sort(out.begin(), out.end(),
            [](const std::vector<Subset>& a, const std::vector<Subset>& b2) {
              if (a.size() != b2.size()) return a.size() < b2.size();
              return std::lexicographical_compare(a.begin(), a.end(), b2.begin(),
                                                  b2.end(), size_mask_less);
            });
  return out;
}

std::vector<std::vector<Subset>> nested_sets(const BuildingSet& b) {
  const std::vector<Subset> tilde = augmented(b);
  std::vector<std::vector<Subset>> out;
  for (std::vector<Subset>& nset : all_nested_sets(b)) {
    bool maximal = true;
    for (Subset s : tilde)
      if (!std::binary_search(nset.begin(), nset.end(), s, size_mask_less) &&
          can_add(tilde, nset, s)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(std::move(nset));
  }
  return out;
}

bool nested_set_complex_anti_iso_check(const BuildingSet& b) {
  const FaceLattice fl = face_lattice(to_vpolytope(nestohedron(b)));
  std::vector<long> nested_by_dim(fl.dim + 1, 0), faces_by_dim(fl.dim + 1, 0);
  for (const std::vector<Subset>& nset : all_nested_sets(b)) {
    const int d = b.ground.n - int(nset.size());
    if (d < 0 || d > fl.dim) return false;
    ++nested_by_dim[d];
  }
  for (int d : fl.face_dim) {
    if (d < 0 || d > fl.dim) return false;
    ++faces_by_dim[d];
  }
  return nested_by_dim == faces_by_dim;
}

std::vector<Subset> descendants(const BForest& t) {
  const int n = int(t.parent.size());
  if (n < 1 || n > kMaxGround)
    throw std::invalid_argument("forest size out of range");
  for (int p : t.parent)
    if (p < -1 || p >= n) throw std::invalid_argument("parent index out of range");
  std::vector<Subset> d(n, 0);
  for (int j = 0; j < n; ++j) {
    Subset seen = 0;
    for (int cur = j; cur != -1; cur = t.parent[cur]) {
      if (contains(seen, cur))
        throw std::invalid_argument("parent map has a cycle");
      seen = with(seen, cur);
      d[cur] = with(d[cur], j);
    }
  }
  return d;
}

void validate_bforest(const BuildingSet& b, const BForest& t) {
  if (int(t.parent.size()) != b.ground.n)
    throw std::invalid_argument("forest and ground set sizes differ");
  const std::vector<Subset> d = descendants(t);
  const std::vector<Subset> tilde = augmented(b);

  for (int i = 0; i < b.ground.n; ++i)
    if (!in_family(tilde, d[i]))
      throw std::invalid_argument("(F1) descendant set " + subset_to_string(d[i]) +
                                  " is not a member");

  // Distinct descendant sets are nested or disjoint, so only pairwise
  // disjoint families can violate (F2).
  auto grow = [&](auto&& self, int from, Subset uni, int picked) -> void {
    if (picked >= 2 && in_family(tilde, uni))
      throw std::invalid_argument(
          "(F2) pairwise incomparable descendant sets union to the member " +
          subset_to_string(uni));
    for (int i = from; i < b.ground.n; ++i)
      if ((d[i] & uni) == 0) self(self, i + 1, uni | d[i], picked + 1);
  };
  grow(grow, 0, 0, 0);

  for (Subset s : inclusion_maximal(tilde))
    if (std::find(d.begin(), d.end(), s) == d.end())
      throw std::invalid_argument("(F3) maximal member " + subset_to_string(s) +
                                  " is not a descendant set");
}

std::vector<BForest> bforests(const BuildingSet& b) {
  const int n = b.ground.n;
  std::vector<BForest> out;
  for (const std::vector<Subset>& nset : nested_sets(b)) {
    if (int(nset.size()) != n)
      throw std::logic_error("maximal nested set does not label every element");
    // Each member owns the one element left after removing its proper
    // sub-members; its parent is the owner of the smallest strict superset.
    std::vector<std::pair<Subset, int>> owner;
    for (Subset s : nset) {
      Subset below = 0;
      for (Subset r : nset)
        if (r != s && (r & ~s) == 0) below |= r;
      const Subset left = s & ~below;
      if (popcount(left) != 1)
        throw std::logic_error("maximal nested set is not a forest");
      owner.emplace_back(s, elements_of(left)[0]);
    }
    BForest t;
    t.parent.assign(n, -1);
    for (const auto& [s, e] : owner) {
      Subset best = 0;
      for (const auto& [r, re] : owner)
        if (r != s && (s & ~r) == 0 && (best == 0 || (r & ~best) == 0)) {
          best = r;
          t.parent[e] = re;
        }
    }
    validate_bforest(b, t);
    out.push_back(std::move(t));
  }
  return out;
}

void validate_marked_chain(const BuildingSet& b, const MarkedChain& c) {
  require_union_closed_cover(b);
  const int n = b.ground.n;
  const int k = int(c.chain.size());
  if (k == 0) throw std::invalid_argument("marked chain is empty");
  if (c.marks.size() != c.chain.size())
    throw std::invalid_argument("one mark per chain member required");

  Subset prev = 0;
  for (int i = 0; i < k; ++i) {
    const Subset s = c.chain[i];
    if (!in_family(b.members, s))
      throw std::invalid_argument("chain member " + subset_to_string(s) +
                                  " is not in the family");
    if ((prev & ~s) != 0 || prev == s)
      throw std::invalid_argument("chain is not strictly increasing at " +
                                  subset_to_string(s));
    const int t = c.marks[i];
    if (t < 0 || t >= n || !contains(s & ~prev, t))
      throw std::invalid_argument("mark " + std::to_string(t + 1) +
                                  " does not lie in its step of the chain");
    prev = s;
  }
  if (prev != full_set(n))
    throw std::invalid_argument("chain must end at the full ground set");

  for (int i = 0; i <= k; ++i) {
    const Subset si = i == 0 ? Subset(0) : c.chain[i - 1];
    Subset later = 0;
    for (int j = i; j < k; ++j) later = with(later, c.marks[j]);
    bool bad = false;
    Subset witness = 0;
    for_each_subset_of(full_set(n) & ~(si | later), [&](Subset r) {
      if (bad || r == 0) return;
      if (in_family(b.members, si | r)) {
        bad = true;
        witness = r;
      }
    });
    if (bad)
      throw std::invalid_argument(
          "chain admits an extension: " + subset_to_string(si) + " + " +
          subset_to_string(witness) + " is in the family");
  }
}

MarkedChain bforest_to_marked_chain(const BuildingSet& b, const BForest& t) {
  require_union_closed_cover(b);
  validate_bforest(b, t);
  const std::vector<Subset> d = descendants(t);

  std::vector<int> marks;
  for (int i = 0; i < b.ground.n; ++i)
    if (in_family(b.members, d[i])) marks.push_back(i);
  std::sort(marks.begin(), marks.end(),
            [&](int i, int j) { return size_mask_less(d[i], d[j]); });
  MarkedChain c;
  for (int i : marks) {
    c.chain.push_back(d[i]);
    c.marks.push_back(i);
  }
  validate_marked_chain(b, c);
  return c;
}

BForest marked_chain_to_bforest(const BuildingSet& b, const MarkedChain& c) {
  validate_marked_chain(b, c);
  BForest t;
  t.parent.assign(b.ground.n, -1);
  const int k = int(c.chain.size());
  Subset prev = 0;
  for (int i = 0; i < k; ++i) {
    const int ti = c.marks[i];
    t.parent[ti] = i + 1 < k ? c.marks[i + 1] : -1;
    for (int x : elements_of(c.chain[i] & ~prev))
      if (x != ti) t.parent[x] = ti;
    prev = c.chain[i];
  }
  validate_bforest(b, t);
  return t;
}

MarkedChain marked_chain_from_greedy_path(const Polymatroid& f,
                                          const GreedyPath& p) {
  if (p.flats.empty() || p.flats.front() != 0)
    throw std::invalid_argument("closure of the empty set must be empty");
  if (p.flats.size() != p.sequence.size() + 1 || p.flats.back() != f.full())
    throw std::invalid_argument("malformed greedy path");
  const int k = int(p.sequence.size());
  MarkedChain c;
  for (int i = 1; i <= k; ++i) {
    c.chain.push_back(f.full() & ~p.flats[k - i]);
    c.marks.push_back(p.sequence[k - i]);
  }
  return c;
}

GreedyPath greedy_path_from_marked_chain(const Polymatroid& f,
                                         const MarkedChain& c) {
  const int k = int(c.chain.size());
  std::vector<int> seq(k);
  for (int i = 0; i < k; ++i) seq[i] = c.marks[k - 1 - i];
  const GreedyPath p = canonicalize_sequence(f, seq);
  if (p.sequence != seq)
    throw std::invalid_argument("chain does not arise from a greedy path");
  for (int i = 0; i <= k; ++i)
    if (p.flats[i] != (f.full() & ~(i == k ? Subset(0) : c.chain[k - 1 - i])))
      throw std::invalid_argument("chain flats do not match the greedy path");
  return p;
}

}  // namespace flagpoly
