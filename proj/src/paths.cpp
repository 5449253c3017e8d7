#include "flagpoly/paths.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace flagpoly {

namespace {

std::vector<Rat> objective_values(const VPolytope& p, const Vec& c) {
  if (c.size() != p.ambient_dim())
    throw std::invalid_argument("objective size mismatch");
  std::vector<Rat> vals;
  vals.reserve(p.vertices().size());
  for (const Vec& v : p.vertices()) vals.push_back(c.dot(v));
  return vals;
}

void require_nonconstant(const std::vector<Rat>& vals) {
  if (std::all_of(vals.begin(), vals.end(),
                  [&](const Rat& x) { return x == vals.front(); }))
    throw std::invalid_argument("objective is constant on the polytope");
}

}  // namespace

bool operator==(const MonotonePath& a, const MonotonePath& b) {
  return a.vertices == b.vertices;
}

std::vector<int> extreme_face(const VPolytope& p, const Vec& c, int sign) {
  const auto vals = objective_values(p, c);
  const Rat best = sign > 0 ? *std::max_element(vals.begin(), vals.end())
                            : *std::min_element(vals.begin(), vals.end());
  std::vector<int> face;
  for (std::size_t i = 0; i < vals.size(); ++i)
    if (vals[i] == best) face.push_back(static_cast<int>(i));
  return face;
}

std::vector<int> improving_neighbors(const VPolytope& p, const Vec& c, int v) {
  if (v < 0 || v >= static_cast<int>(p.vertices().size()))
    throw std::invalid_argument("vertex index out of range");
  const Rat base = c.dot(p.vertices()[v]);
  const auto adj = p.adjacency();
  std::vector<int> out;
  for (int u : adj[v])
    if (c.dot(p.vertices()[u]) > base) out.push_back(u);
  return out;
}

std::vector<MonotonePath> enumerate_monotone_paths(const VPolytope& p,
                                                   const Vec& c) {
  const auto vals = objective_values(p, c);
  require_nonconstant(vals);
  const auto adj = p.adjacency();
  std::vector<MonotonePath> out;
  std::vector<int> walk;
  auto dfs = [&](auto&& self, int v) -> void {
    walk.push_back(v);
    bool leaf = true;
    for (int u : adj[v])
      if (vals[u] > vals[v]) {
        leaf = false;
        self(self, u);
      }
    if (leaf) out.push_back(MonotonePath{walk});
    walk.pop_back();
  };
  for (int v : extreme_face(p, c, -1)) dfs(dfs, v);
  return out;
}

std::optional<Vec> is_coherent(const VPolytope& p, const Vec& c,
                               const MonotonePath& path) {
  const auto vals = objective_values(p, c);
  require_nonconstant(vals);
  const auto& vs = path.vertices;
  if (vs.empty()) throw std::invalid_argument("empty path");
  for (int v : vs)
    if (v < 0 || v >= static_cast<int>(p.vertices().size()))
      throw std::invalid_argument("vertex index out of range");
  const Rat lo = *std::min_element(vals.begin(), vals.end());
  const Rat hi = *std::max_element(vals.begin(), vals.end());
  if (vals[vs.front()] != lo || vals[vs.back()] != hi)
    throw std::invalid_argument("path does not join the extreme faces");
  const auto adj = p.adjacency();
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (vals[vs[i]] >= vals[vs[i + 1]])
      throw std::invalid_argument("path is not strictly increasing");
    if (!std::binary_search(adj[vs[i]].begin(), adj[vs[i]].end(), vs[i + 1]))
      throw std::invalid_argument("path step is not an edge");
  }

  std::vector<Vec> strict;
  const Vec& v0 = p.vertices()[vs.front()];
  for (int u : extreme_face(p, c, -1))
    if (u != vs.front()) strict.push_back(v0 - p.vertices()[u]);
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    const Vec& a = p.vertices()[vs[i]];
    const Vec& b = p.vertices()[vs[i + 1]];
    const Rat db = vals[vs[i + 1]] - vals[vs[i]];
    for (int u : improving_neighbors(p, c, vs[i])) {
      if (u == vs[i + 1]) continue;
      const Vec& q = p.vertices()[u];
      const Rat dq = vals[u] - vals[vs[i]];
      strict.push_back((b - a) * dq - (q - a) * db);
    }
  }
  return strict_feasible(strict, p.ambient_dim());
}

Vec path_point(const VPolytope& p, const Vec& c, const MonotonePath& path) {
  if (path.vertices.empty()) throw std::invalid_argument("empty path");
  Vec x = Vec::Zero(p.ambient_dim());
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    const Vec& a = p.vertices()[path.vertices[i]];
    const Vec& b = p.vertices()[path.vertices[i + 1]];
    x += c.dot(b - a) * (a + b);
  }
  return x;
}

VPolytope mpp(const VPolytope& p, const Vec& c) {
  const auto vals = objective_values(p, c);
  require_nonconstant(vals);
  std::vector<Rat> levels = vals;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (const EdgeCert& e : p.edges()) {
    const Rat lo = std::min(vals[e.a], vals[e.b]);
    const Rat hi = std::max(vals[e.a], vals[e.b]);
    for (const Rat& s : levels)
      if (lo < s && s < hi)
        throw std::runtime_error(
            "slice level cuts the interior of edge {" + std::to_string(e.a) +
            "," + std::to_string(e.b) + "}; fiber sum not available");
  }
  std::vector<VPolytope> slices;
  for (const Rat& s : levels) {
    std::vector<Vec> verts, certs;
    for (std::size_t i = 0; i < vals.size(); ++i)
      if (vals[i] == s) {
        verts.push_back(p.vertices()[i]);
        certs.push_back(p.vertex_certificate(static_cast<int>(i)));
      }
    slices.push_back(VPolytope::from_vertices(std::move(verts), std::move(certs)));
  }
  return minkowski_sum(slices);
}

Arborescence max_slope_arborescence(const VPolytope& p, const Vec& c,
                                    const Vec& w) {
  const auto vals = objective_values(p, c);
  require_nonconstant(vals);
  if (w.size() != p.ambient_dim())
    throw std::invalid_argument("weight size mismatch");
  const Rat top = *std::max_element(vals.begin(), vals.end());
  Arborescence a;
  a.next.resize(p.vertices().size());
  for (int v = 0; v < static_cast<int>(p.vertices().size()); ++v) {
    if (vals[v] == top) {
      a.next[v] = v;
      continue;
    }
    int best = -1;
    Rat bnum, bden;
    bool tied = false;
    for (int u : improving_neighbors(p, c, v)) {
      const Rat num = w.dot(p.vertices()[u] - p.vertices()[v]);
      const Rat den = vals[u] - vals[v];
      if (best < 0 || num * bden > bnum * den) {
        best = u;
        bnum = num;
        bden = den;
        tied = false;
      } else if (num * bden == bnum * den) {
        tied = true;
      }
    }
    if (tied)
      throw std::invalid_argument("weight is not generic: tied slopes at vertex " +
                                  std::to_string(v));
    a.next[v] = best;
  }
  return a;
}

Vec arborescence_point(const VPolytope& p, const Vec& c,
                       const Arborescence& a) {
  if (a.next.size() != p.vertices().size())
    throw std::invalid_argument("arborescence size mismatch");
  Vec x = Vec::Zero(p.ambient_dim());
  for (std::size_t v = 0; v < a.next.size(); ++v) {
    if (a.next[v] == static_cast<int>(v)) continue;
    const Vec d = p.vertices()[a.next[v]] - p.vertices()[v];
    x += d / c.dot(d);
  }
  return x;
}

VPolytope pivot_polytope(const VPolytope& p, const Vec& c) {
  const auto vals = objective_values(p, c);
  require_nonconstant(vals);
  const Rat top = *std::max_element(vals.begin(), vals.end());

  struct CloudCmp {
    bool operator()(const std::vector<Vec>& a, const std::vector<Vec>& b) const {
      if (a.size() != b.size()) return a.size() < b.size();
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (vec_less(a[i], b[i])) return true;
        if (vec_less(b[i], a[i])) return false;
      }
      return false;
    }
  };
  std::map<std::vector<Vec>, int, CloudCmp> groups;
  for (int v = 0; v < static_cast<int>(p.vertices().size()); ++v) {
    if (vals[v] == top) continue;
    std::vector<Vec> cloud;
    for (int u : improving_neighbors(p, c, v)) {
      const Vec d = p.vertices()[u] - p.vertices()[v];
      cloud.push_back(d / c.dot(d));
    }
    std::sort(cloud.begin(), cloud.end(), vec_less);
    cloud.erase(std::unique(cloud.begin(), cloud.end(), vec_eq), cloud.end());
    groups[std::move(cloud)] += 1;
  }

  std::vector<VPolytope> summands;
  for (const auto& [cloud, mult] : groups) {
    std::vector<Vec> scaled;
    scaled.reserve(cloud.size());
    for (const Vec& x : cloud) scaled.push_back(Rat(mult) * x);
    summands.push_back(VPolytope::from_points(std::move(scaled)));
  }
  return minkowski_sum(summands);
}

Vec symmetrized_simplex_decomposition(const Vec& v) {
  const int n = static_cast<int>(v.size());
  if (n == 0) throw std::invalid_argument("empty point");
  for (int i = 0; i < n; ++i) {
    if (v[i] < 0) throw std::invalid_argument("point has a negative entry");
    if (i > 0 && v[i] < v[i - 1])
      throw std::invalid_argument("point is not weakly increasing");
  }
  Mat m = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, 0) = 1;
    for (int j = 1; j <= i; ++j) m(i, j) = m(i - 1, j - 1) + (j <= i - 1 ? m(i - 1, j) : Rat(0));
  }
  Vec coeff = Vec::Zero(n);
  for (int i = 0; i < n; ++i) {
    Rat acc = v[i];
    for (int j = 0; j < i; ++j) acc -= m(i, j) * coeff[j];
    coeff[i] = acc;
  }
  return coeff;
}

}  // namespace flagpoly
