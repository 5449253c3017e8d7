#include "flagpoly/greedy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "flagpoly/subsets.hpp"

namespace flagpoly {

GreedyRun greedy_base_vertex(const Polymatroid& f, const Vec& w) {
  const int n = f.n();
  if (w.size() != n) throw std::invalid_argument("weight size mismatch");
  GreedyRun r;
  r.order.resize(n);
  std::iota(r.order.begin(), r.order.end(), 0);
  std::stable_sort(r.order.begin(), r.order.end(),
                   [&](int a, int b) { return w[a] > w[b]; });
  r.x = Vec::Zero(n);
  Subset seen = 0;
  for (int e : r.order) {
    r.x[e] = f.value(with(seen, e)) - f.value(seen);
    seen = with(seen, e);
  }
  r.value = w.dot(r.x);
  return r;
}

GreedyRun greedy_independence_vertex(const Polymatroid& f, const Vec& w) {
  const int n = f.n();
  if (w.size() != n) throw std::invalid_argument("weight size mismatch");
  std::vector<int> pos;
  for (int e = 0; e < n; ++e)
    if (w[e] > 0) pos.push_back(e);
  std::stable_sort(pos.begin(), pos.end(), [&](int a, int b) { return w[a] > w[b]; });
  GreedyRun r;
  r.x = Vec::Zero(n);
  Subset seen = 0;
  for (int e : pos) {
    r.x[e] = f.value(with(seen, e)) - f.value(seen);
    seen = with(seen, e);
  }
  r.order = std::move(pos);
  r.value = w.dot(r.x);
  return r;
}

VPolytope base_vpolytope(const Polymatroid& f) {
  return to_vpolytope(GenPerm::from_polymatroid(f));
}

VPolytope independence_vpolytope(const Polymatroid& f) {
  const int n = f.n();
  // The base polytope of the one-element extension projects bijectively onto
  // the independence polytope by dropping the slack coordinate.  The slack is
  // an affine function of the rest, so lexicographic vertex order, weight
  // certificates (after shifting the slack weight to zero), and edges all
  // carry over unchanged.
  VPolytope b = base_vpolytope(extend(f));
  std::vector<Vec> verts, certs;
  verts.reserve(b.vertices().size());
  certs.reserve(b.vertices().size());
  for (std::size_t i = 0; i < b.vertices().size(); ++i) {
    verts.push_back(b.vertices()[i].head(n));
    const Vec& w = b.vertex_certificate(static_cast<int>(i));
    certs.push_back(w.head(n) - Vec::Constant(n, w[n]));
  }
  std::vector<std::pair<int, int>> cand;
  for (const EdgeCert& e : b.edges()) cand.emplace_back(e.a, e.b);
  VPolytope p = VPolytope::from_vertices(std::move(verts), std::move(certs));
  p.set_edge_candidates(std::move(cand));
  return p;
}

bool operator==(const GreedyPath& a, const GreedyPath& b) {
  return a.sequence == b.sequence && a.flats == b.flats;
}

GreedyPath canonicalize_sequence(const Polymatroid& f, const std::vector<int>& seq) {
  GreedyPath p;
  Subset flat = closure(f, 0);
  p.flats.push_back(flat);
  for (int j : seq) {
    if (j < 0 || j >= f.n()) throw std::invalid_argument("element out of range");
    if (contains(flat, j)) continue;
    flat = closure(f, with(flat, j));
    p.sequence.push_back(j);
    p.flats.push_back(flat);
  }
  if (flat != f.full())
    throw std::invalid_argument("sequence does not reach the full ground set");
  return p;
}

GreedyPath greedy_path(const Polymatroid& f, const Vec& w) {
  const int n = f.n();
  if (w.size() != n) throw std::invalid_argument("weight size mismatch");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (w[a] == w[b])
        throw std::invalid_argument("weights " + std::to_string(a + 1) + " and " +
                                    std::to_string(b + 1) + " are tied");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return w[a] > w[b]; });
  return canonicalize_sequence(f, order);
}

namespace {

void extend_paths(const Polymatroid& f, GreedyPath& p,
                  std::vector<GreedyPath>& out) {
  Subset flat = p.flats.back();
  if (flat == f.full()) {
    out.push_back(p);
    return;
  }
  for (int j = 0; j < f.n(); ++j) {
    if (contains(flat, j)) continue;
    p.sequence.push_back(j);
    p.flats.push_back(closure(f, with(flat, j)));
    extend_paths(f, p, out);
    p.sequence.pop_back();
    p.flats.pop_back();
  }
}

}  // namespace

std::vector<GreedyPath> enumerate_greedy_paths(const Polymatroid& f) {
  GreedyPath p;
  p.flats.push_back(closure(f, 0));
  std::vector<GreedyPath> out;
  extend_paths(f, p, out);
  return out;
}

Vec path_vertex(const Polymatroid& f, const GreedyPath& p) {
  Vec x = Vec::Zero(f.n());
  const Rat m2 = 2 * f.rank();
  for (std::size_t i = 0; i < p.sequence.size(); ++i) {
    const Rat& lo = f.value(p.flats[i]);
    const Rat& hi = f.value(p.flats[i + 1]);
    x[p.sequence[i]] = (hi - lo) * (m2 - hi - lo);
  }
  return x;
}

std::vector<GreedyPath> path_neighbors(const Polymatroid& f, const GreedyPath& p) {
  std::set<std::vector<int>> seqs;
  auto try_seq = [&](const std::vector<int>& s) {
    GreedyPath q = canonicalize_sequence(f, s);
    if (q.sequence != p.sequence) seqs.insert(q.sequence);
  };

  const auto& seq = p.sequence;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    for (int x : elements_of(p.flats[t + 1] & ~p.flats[t])) {
      if (x == seq[t]) continue;
      std::vector<int> s(seq.begin(), seq.begin() + t);
      s.push_back(x);
      s.insert(s.end(), seq.begin() + t, seq.end());
      try_seq(s);
    }
    if (t + 1 < seq.size()) {
      std::vector<int> s = seq;
      std::swap(s[t], s[t + 1]);
      try_seq(s);
    }
  }

  std::vector<GreedyPath> out;
  out.reserve(seqs.size());
  for (const auto& s : seqs) out.push_back(canonicalize_sequence(f, s));
  return out;
}

}  // namespace flagpoly
