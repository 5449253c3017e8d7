#include "flagpoly/matroid.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagpoly {

namespace {
[[noreturn]] void axiom_failure(const std::string& axiom, Subset a, Subset b) {
  throw std::invalid_argument("matroid axiom '" + axiom + "' violated at (" +
                              subset_to_string(a) + ", " + subset_to_string(b) + ")");
}
}  // namespace

Matroid::Matroid(GroundSet g, std::vector<char> indep)
    : ground_(std::move(g)), indep_(std::move(indep)) {
  const size_t size = size_t(1) << ground_.n;
  rank_.assign(size, 0);
  for (Subset a = 1; a < size; ++a) {
    if (indep_[a]) {
      rank_[a] = popcount(a);
    } else {
      int r = 0;
      for (int e : elements_of(a)) r = std::max(r, rank_[without(a, e)]);
      rank_[a] = r;
    }
  }
}

Matroid Matroid::from_independents(GroundSet g, const std::vector<Subset>& indep) {
  if (g.n < 0 || g.n > kMaxGround) throw std::invalid_argument("ground set size out of range");
  std::vector<char> table(size_t(1) << g.n, 0);
  for (Subset a : indep) {
    if (a >= table.size()) throw std::invalid_argument("independent set out of ground range");
    table[a] = 1;
  }
  if (!table[0]) axiom_failure("nonempty", 0, 0);
  for (Subset a = 1; a < table.size(); ++a) {
    if (!table[a]) continue;
    for (int e : elements_of(a))
      if (!table[without(a, e)]) axiom_failure("hereditary", a, without(a, e));
  }
  for (Subset a = 0; a < table.size(); ++a) {
    if (!table[a]) continue;
    for (Subset b = 0; b < table.size(); ++b) {
      if (!table[b] || popcount(a) >= popcount(b)) continue;
      bool augmented = false;
      for (int e : elements_of(b & ~a)) {
        if (table[with(a, e)]) {
          augmented = true;
          break;
        }
      }
      if (!augmented) axiom_failure("augmentation", a, b);
    }
  }
  return Matroid(std::move(g), std::move(table));
}

Matroid Matroid::from_bases(GroundSet g, const std::vector<Subset>& bases) {
  if (bases.empty()) throw std::invalid_argument("matroid needs at least one basis");
  const int size = popcount(bases[0]);
  for (Subset b : bases)
    if (popcount(b) != size) axiom_failure("equicardinal bases", bases[0], b);
  std::vector<Subset> indep;
  std::vector<char> seen(size_t(1) << g.n, 0);
  for (Subset b : bases) {
    for_each_subset_of(b, [&](Subset s) {
      if (!seen[s]) {
        seen[s] = 1;
        indep.push_back(s);
      }
    });
  }
  return from_independents(std::move(g), indep);
}

Polymatroid Matroid::rank_polymatroid() const {
  std::vector<Rat> v(rank_.size());
  for (size_t a = 0; a < rank_.size(); ++a) v[a] = rank_[a];
  return Polymatroid(ground_, std::move(v));
}

std::vector<Subset> Matroid::bases() const {
  std::vector<Subset> out;
  const int r = rank();
  for (Subset a = 0; a < indep_.size(); ++a)
    if (indep_[a] && popcount(a) == r) out.push_back(a);
  return out;
}

std::vector<Subset> Matroid::independents() const {
  std::vector<Subset> out;
  for (Subset a = 0; a < indep_.size(); ++a)
    if (indep_[a]) out.push_back(a);
  return out;
}

Matroid uniform_matroid(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("uniform matroid needs 0 <= k <= n");
  std::vector<Subset> indep;
  for (Subset a = 0; a < (Subset(1) << n); ++a)
    if (popcount(a) <= k) indep.push_back(a);
  return Matroid::from_independents(GroundSet::of_size(n), indep);
}

std::vector<Subset> cocircuits(const Matroid& m) {
  const std::vector<Subset> bases = m.bases();
  std::vector<Subset> transversals;
  for (Subset k = 1; k < (Subset(1) << m.n()); ++k) {
    bool hits_all = true;
    for (Subset b : bases) {
      if (!(b & k)) {
        hits_all = false;
        break;
      }
    }
    if (hits_all) transversals.push_back(k);
  }
  std::vector<Subset> minimal;
  for (Subset k : transversals) {
    bool is_min = true;
    for (Subset j : transversals) {
      if (j != k && (j & k) == j) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(k);
  }
  return minimal;
}

namespace {
GroundSet drop_element(const GroundSet& g, int e) {
  std::vector<std::string> labels = g.labels;
  labels.erase(labels.begin() + e);
  return GroundSet::with_labels(std::move(labels));
}

Subset compress(Subset a, int e) {
  Subset low = a & (full_set(e));
  Subset high = a >> (e + 1);
  return low | (high << e);
}
}  // namespace

Matroid deletion(const Matroid& m, int e) {
  if (e < 0 || e >= m.n()) throw std::invalid_argument("element out of range");
  std::vector<Subset> indep;
  for (Subset a : m.independents())
    if (!contains(a, e)) indep.push_back(compress(a, e));
  return Matroid::from_independents(drop_element(m.ground(), e), indep);
}

Matroid contraction(const Matroid& m, int e) {
  if (e < 0 || e >= m.n()) throw std::invalid_argument("element out of range");
  if (!m.independent(Subset(1) << e)) return deletion(m, e);  // loops delete
  std::vector<Subset> indep;
  for (Subset a : m.independents())
    if (contains(a, e)) indep.push_back(compress(without(a, e), e));
  return Matroid::from_independents(drop_element(m.ground(), e), indep);
}

}  // namespace flagpoly
