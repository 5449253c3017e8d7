#include "flagpoly/genperm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "flagpoly/subsets.hpp"

namespace flagpoly {

std::vector<std::vector<int>> all_orders(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("order enumeration needs 1 <= n <= 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Vec order_weight(const std::vector<int>& order, int n) {
  Vec w = Vec::Zero(n);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) w[order[i]] = n - i;
  return w;
}

GenPerm::GenPerm(GroundSet ground, std::vector<Rat> values)
    : ground_(std::move(ground)), values_(std::move(values)) {
  const int n = ground_.n;
  if (values_.size() != (std::size_t{1} << n))
    throw std::invalid_argument("value table size mismatch");
  if (values_[0] != 0) throw std::invalid_argument("z(empty) must be 0");
  for (Subset a = 0; a < (Subset(1) << n); ++a) {
    for (int e = 0; e < n; ++e) {
      if (contains(a, e)) continue;
      for (int g = e + 1; g < n; ++g) {
        if (contains(a, g)) continue;
        if (values_[with(a, e)] + values_[with(a, g)] <
            values_[a] + values_[with(with(a, e), g)])
          throw std::invalid_argument("function is not submodular");
      }
    }
  }
}

GenPerm GenPerm::from_polymatroid(const Polymatroid& f) {
  return GenPerm(f.ground(), f.values());
}

GenPerm standard_permutahedron(int n) {
  std::vector<Rat> v(std::size_t(1) << n);
  for (Subset a = 0; a < v.size(); ++a) {
    long s = 0;
    for (int i = 0; i < popcount(a); ++i) s += n - i;
    v[a] = Rat(s);
  }
  return GenPerm(GroundSet::of_size(n), std::move(v));
}

GenPerm operator+(const GenPerm& a, const GenPerm& b) {
  if (a.n() != b.n()) throw std::invalid_argument("ground set mismatch");
  std::vector<Rat> v(a.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values()[i] + b.values()[i];
  return GenPerm(a.ground(), std::move(v));
}

GenPerm dilate(const GenPerm& a, const Rat& s) {
  if (s < 0) throw std::invalid_argument("dilation factor must be nonnegative");
  std::vector<Rat> v(a.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = s * a.values()[i];
  return GenPerm(a.ground(), std::move(v));
}

GenPerm translate(const GenPerm& a, const Vec& t) {
  if (t.size() != a.n()) throw std::invalid_argument("translation size mismatch");
  std::vector<Rat> v(a.values().size());
  for (Subset s = 0; s < (Subset(1) << a.n()); ++s) {
    Rat shift = 0;
    for (int e : elements_of(s)) shift += t[e];
    v[s] = a.values()[s] + shift;
  }
  return GenPerm(a.ground(), std::move(v));
}

Vec greedy_vertex(const GenPerm& z, const std::vector<int>& order) {
  const int n = z.n();
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("order length mismatch");
  Vec x = Vec::Zero(n);
  Subset seen = 0;
  for (int e : order) {
    if (e < 0 || e >= n || contains(seen, e))
      throw std::invalid_argument("order is not a permutation");
    x[e] = z.value(with(seen, e)) - z.value(seen);
    seen = with(seen, e);
  }
  return x;
}

Vec greedy_max_vertex(const GenPerm& z, const Vec& w) {
  if (w.size() != z.n()) throw std::invalid_argument("weight size mismatch");
  std::vector<int> order(z.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return w[a] > w[b]; });
  return greedy_vertex(z, order);
}

namespace {

struct VecCmp {
  bool operator()(const Vec& a, const Vec& b) const { return vec_less(a, b); }
};

struct GreedySweep {
  std::vector<Vec> vertices;        // sorted
  std::vector<int> order_to_vertex; // per lexicographic order
  std::vector<std::vector<int>> orders;
};

GreedySweep sweep(const GenPerm& z) {
  GreedySweep s;
  s.orders = all_orders(z.n());
  std::vector<Vec> raw;
  raw.reserve(s.orders.size());
  for (const auto& o : s.orders) raw.push_back(greedy_vertex(z, o));
  std::map<Vec, int, VecCmp> id;
  for (const Vec& v : raw) id.emplace(v, 0);
  int k = 0;
  for (auto& [v, i] : id) {
    i = k++;
    s.vertices.push_back(v);
  }
  s.order_to_vertex.reserve(raw.size());
  for (const Vec& v : raw) s.order_to_vertex.push_back(id.at(v));
  return s;
}

}  // namespace

VPolytope to_vpolytope(const GenPerm& z) {
  const int n = z.n();
  GreedySweep s = sweep(z);

  std::vector<Vec> certs(s.vertices.size());
  std::vector<char> have(s.vertices.size(), 0);
  for (std::size_t oi = 0; oi < s.orders.size(); ++oi) {
    int vid = s.order_to_vertex[oi];
    if (!have[vid]) {
      certs[vid] = order_weight(s.orders[oi], n);
      have[vid] = 1;
    }
  }

  std::set<std::pair<int, int>> cand;
  for (std::size_t oi = 0; oi < s.orders.size(); ++oi) {
    auto o = s.orders[oi];
    const int u = s.order_to_vertex[oi];
    for (int i = 0; i + 1 < n; ++i) {
      std::swap(o[i], o[i + 1]);
      Vec v = greedy_vertex(z, o);
      std::swap(o[i], o[i + 1]);
      int vid = static_cast<int>(
          std::lower_bound(s.vertices.begin(), s.vertices.end(), v, vec_less) -
          s.vertices.begin());
      if (vid != u) cand.insert({std::min(u, vid), std::max(u, vid)});
    }
  }

  VPolytope p = VPolytope::from_vertices(s.vertices, certs);
  p.set_edge_candidates({cand.begin(), cand.end()});
  return p;
}

Fingerprint fingerprint_of(const GenPerm& z) {
  GreedySweep s = sweep(z);
  Fingerprint fp;
  fp.n = z.n();
  fp.vertices = std::move(s.vertices);
  fp.chamber_vertex = std::move(s.order_to_vertex);
  return fp;
}

Fingerprint fingerprint_of_points(const std::vector<Vec>& points) {
  if (points.empty()) throw std::invalid_argument("empty point cloud");
  const int n = static_cast<int>(points[0].size());
  VPolytope p = VPolytope::from_points(points);

  Rat total = p.vertices()[0].sum();
  for (const Vec& v : p.vertices()) {
    if (v.sum() != total)
      throw std::invalid_argument("coordinate sums differ across vertices");
  }
  for (const auto& e : p.edges()) {
    Vec d = p.vertices()[e.a] - p.vertices()[e.b];
    int nz = 0;
    Rat s = 0;
    for (int i = 0; i < n; ++i) {
      if (d[i] != 0) ++nz;
      s += d[i];
    }
    if (nz != 2 || s != 0)
      throw std::invalid_argument("edge direction is not parallel to e_i - e_j");
  }

  Fingerprint fp;
  fp.n = n;
  fp.vertices = p.vertices();
  for (const auto& o : all_orders(n)) {
    Vec w = order_weight(o, n);
    auto top = lp_max(fp.vertices, w);
    if (top.argmax.size() != 1)
      throw std::logic_error("chamber weight has tied optima");
    fp.chamber_vertex.push_back(top.argmax[0]);
  }
  return fp;
}

namespace {

std::vector<int> canonical_labels(const std::vector<int>& classes) {
  std::vector<int> relabel;
  std::map<int, int> seen;
  relabel.reserve(classes.size());
  for (int c : classes) {
    auto it = seen.emplace(c, static_cast<int>(seen.size())).first;
    relabel.push_back(it->second);
  }
  return relabel;
}

}  // namespace

bool same_partition(const Fingerprint& a, const Fingerprint& b) {
  if (a.n != b.n) return false;
  return canonical_labels(a.chamber_vertex) == canonical_labels(b.chamber_vertex);
}

bool partition_refines(const Fingerprint& fine, const Fingerprint& coarse) {
  if (fine.n != coarse.n) return false;
  std::map<int, int> target;
  for (std::size_t i = 0; i < fine.chamber_vertex.size(); ++i) {
    auto [it, fresh] =
        target.emplace(fine.chamber_vertex[i], coarse.chamber_vertex[i]);
    if (!fresh && it->second != coarse.chamber_vertex[i]) return false;
  }
  return true;
}

}  // namespace flagpoly
