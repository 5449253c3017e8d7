#include "flagpoly/flag.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "flagpoly/linalg.hpp"

namespace flagpoly {

FlagPolymatroid flag_polymatroid(const Polymatroid& f) {
  const Rat& m = f.rank();
  std::vector<Rat> vals(f.values().size());
  for (Subset a = 0; a < vals.size(); ++a)
    vals[a] = 2 * m * f.value(a) - f.value(a) * f.value(a);
  return FlagPolymatroid{f, Polymatroid(f.ground(), std::move(vals))};
}

namespace {

// Affine dimension of the listed vertices; -1 for the empty set.
int affine_dim(const std::vector<Vec>& verts, const std::vector<int>& idx) {
  if (idx.empty()) return -1;
  Mat diffs(static_cast<int>(idx.size()) - 1, verts[idx[0]].size());
  for (std::size_t i = 1; i < idx.size(); ++i)
    diffs.row(static_cast<int>(i) - 1) = verts[idx[i]] - verts[idx[0]];
  return rank_gauss(diffs);
}

}  // namespace

FlagFacets mpp_facets(const Polymatroid& f) {
  FlagPolymatroid fp = flag_polymatroid(f);
  VPolytope b = to_vpolytope(GenPerm::from_polymatroid(fp.flag));
  const int facet_dim = b.dim() - 1;
  const auto& verts = b.vertices();

  FlagFacets out;
  out.total = fp.flag.rank();
  std::set<std::vector<int>> tight_seen;
  for (Subset fl : flats(fp.flag).flats) {
    if (fl == 0 || fl == fp.flag.full()) continue;
    const Rat& bound = fp.flag.value(fl);
    std::vector<int> tight;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      Rat s(0);
      for (int e : elements_of(fl)) s += verts[i][e];
      if (s == bound) tight.push_back(static_cast<int>(i));
    }
    if (affine_dim(verts, tight) != facet_dim) continue;
    if (tight_seen.insert(std::move(tight)).second)
      out.flat_bounds.emplace_back(fl, bound);
  }
  for (int e = 0; e < f.n(); ++e) {
    std::vector<int> tight;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (verts[i][e] == 0) tight.push_back(static_cast<int>(i));
    if (affine_dim(verts, tight) != facet_dim) continue;
    if (tight_seen.insert(std::move(tight)).second) out.nonneg.push_back(e);
  }
  return out;
}

namespace {

void check_rank_vector(const Matroid& m, const std::vector<int>& ranks) {
  if (ranks.empty()) throw std::invalid_argument("empty rank vector");
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] < 0 || ranks[i] > m.rank())
      throw std::invalid_argument("selected rank out of range");
    if (i > 0 && ranks[i] <= ranks[i - 1])
      throw std::invalid_argument("rank vector is not strictly increasing");
  }
}

}  // namespace

RankSelected rank_selected_vertices(const Matroid& m,
                                    const std::vector<int>& ranks) {
  check_rank_vector(m, ranks);
  RankSelected out;
  for (Subset i : m.independents())
    if (std::binary_search(ranks.begin(), ranks.end(), popcount(i)))
      out.sets.push_back(i);
  std::sort(out.sets.begin(), out.sets.end(), [](Subset a, Subset b) {
    return std::make_pair(popcount(a), a) < std::make_pair(popcount(b), b);
  });

  const int n = m.n();
  std::vector<Vec> verts, certs;
  for (Subset s : out.sets) {
    Vec v = Vec::Zero(n), w = Vec::Constant(n, Rat(-1));
    for (int e : elements_of(s)) {
      v[e] = 1;
      w[e] = 1;
    }
    verts.push_back(std::move(v));
    certs.push_back(std::move(w));
  }
  out.poly = VPolytope::from_vertices(std::move(verts), std::move(certs));
  return out;
}

RankSelectedEdges rank_selected_edges(const Matroid& m,
                                      const std::vector<int>& ranks) {
  RankSelected rs = rank_selected_vertices(m, ranks);
  RankSelectedEdges out;
  for (const EdgeCert& e : rs.poly.edges()) {
    if (popcount(rs.sets[e.a]) == popcount(rs.sets[e.b]))
      out.level.emplace_back(e.a, e.b);
    else
      out.increasing.emplace_back(e.a, e.b);
  }

  std::vector<std::pair<int, int>> predicted;
  for (std::size_t i = 0; i < rs.sets.size(); ++i)
    for (std::size_t j = i + 1; j < rs.sets.size(); ++j) {
      const Subset a = rs.sets[i], b = rs.sets[j];
      if ((a & b) != a || a == b) continue;
      const auto pa = std::find(ranks.begin(), ranks.end(), popcount(a));
      const auto pb = std::find(ranks.begin(), ranks.end(), popcount(b));
      if (pa != ranks.end() && pb == pa + 1)
        predicted.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  std::sort(predicted.begin(), predicted.end());
  std::vector<std::pair<int, int>> found = out.increasing;
  std::sort(found.begin(), found.end());
  if (found != predicted)
    throw std::logic_error(
        "edge oracle disagrees with the consecutive-rank containment rule");
  return out;
}

GenPerm flag_matroid_polytope(const Matroid& m, const std::vector<int>& ranks) {
  check_rank_vector(m, ranks);
  const Polymatroid r = m.rank_polymatroid();
  GenPerm sum = GenPerm::from_polymatroid(truncate(r, Rat(ranks[0])));
  for (std::size_t i = 1; i < ranks.size(); ++i)
    sum = sum + GenPerm::from_polymatroid(truncate(r, Rat(ranks[i])));
  return sum;
}

PartialPermutahedron partial_permutahedron(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("m and n must be positive");
  std::vector<Vec> verts, certs;
  const int jmax = std::min(m, n);
  for (int j = 0; j <= jmax; ++j) {
    std::vector<int> values(j);
    for (int t = 0; t < j; ++t) values[t] = n - t;
    for (Subset s = 0; s < (Subset(1) << m); ++s) {
      if (popcount(s) != j) continue;
      const std::vector<int> support = elements_of(s);
      std::sort(values.begin(), values.end());
      do {
        Vec v = Vec::Zero(m), w = Vec::Constant(m, Rat(-1));
        for (int t = 0; t < j; ++t) {
          v[support[t]] = values[t];
          w[support[t]] = values[t];
        }
        verts.push_back(std::move(v));
        certs.push_back(std::move(w));
      } while (std::next_permutation(values.begin(), values.end()));
    }
  }
  PartialPermutahedron out;
  out.m = m;
  out.n = n;
  out.poly = VPolytope::from_vertices(std::move(verts), std::move(certs));
  return out;
}

VPolytope embedded_partial_permutahedron(const PartialPermutahedron& p) {
  const Rat total = Rat(p.n * (p.n + 1)) / 2;
  std::vector<Vec> verts, certs;
  for (std::size_t i = 0; i < p.poly.vertices().size(); ++i) {
    const Vec& v = p.poly.vertices()[i];
    Vec ve(p.m + 1), we = Vec::Zero(p.m + 1);
    ve.head(p.m) = v;
    ve[p.m] = total - v.sum();
    we.head(p.m) = p.poly.vertex_certificate(static_cast<int>(i));
    verts.push_back(std::move(ve));
    certs.push_back(std::move(we));
  }
  return VPolytope::from_vertices(std::move(verts), std::move(certs));
}

long heuer_striker_count(int m, int n, int k) {
  if (m < n || n < 1) throw std::invalid_argument("requires m >= n >= 1");
  if (k < 0 || k > m) throw std::invalid_argument("face dimension out of range");
  const Subset full = full_set(m);
  long count = 0;
  // lo = size of the smallest nonempty member so far (-1 if none); the
  // current member is always the largest, so the size span is size - lo.
  auto extend = [&](auto&& self, Subset last, int members, int lo) -> void {
    if (members > 0 && popcount(last) + 1 - members == k) ++count;
    for_each_subset_of(full & ~last, [&](Subset add) {
      if (add == 0) return;
      const Subset next = last | add;
      const int size = popcount(next);
      const int nlo = lo < 0 ? size : lo;
      if (size - nlo > n - 1) return;
      self(self, next, members + 1, nlo);
    });
  };
  extend(extend, 0, 0, -1);  // chains starting at a nonempty set
  extend(extend, 0, 1, -1);  // chains whose bottom member is the empty set
  return count;
}

}  // namespace flagpoly
