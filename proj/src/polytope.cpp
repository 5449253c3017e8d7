#include "flagpoly/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "flagpoly/linalg.hpp"

namespace flagpoly {

bool vec_less(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool vec_eq(const Vec& a, const Vec& b) {
  return a.size() == b.size() && a == b;
}

namespace {

// Shared cutting-plane loop. Separates cloud[pi] from every other point,
// optionally constrained to the hyperplane <w, eq_dir> = 0.
std::optional<Vec> separate(const std::vector<Vec>& cloud, int pi,
                            const std::optional<Vec>& eq_dir, int skip = -1) {
  const Vec& p = cloud[pi];
  const int m = static_cast<int>(p.size());
  std::vector<std::pair<Vec, Rat>> eqs;
  if (eq_dir) eqs.emplace_back(*eq_dir, Rat(0));

  std::vector<int> active;
  std::vector<char> in_active(cloud.size(), 0);
  for (std::size_t iter = 0; iter <= cloud.size() + 1; ++iter) {
    std::vector<Vec> rows;
    rows.reserve(active.size());
    for (int q : active) rows.push_back(p - cloud[q]);
    auto w = strict_feasible(rows, m, eqs);
    if (!w) return std::nullopt;

    int worst = -1;
    Rat worst_gap;
    for (int q = 0; q < static_cast<int>(cloud.size()); ++q) {
      if (q == pi || q == skip) continue;
      Rat gap = w->dot(p - cloud[q]);
      if (gap <= 0 && (worst < 0 || gap < worst_gap)) {
        worst = q;
        worst_gap = gap;
      }
    }
    if (worst < 0) return w;
    if (in_active[worst]) throw std::logic_error("separation cut repeated");
    in_active[worst] = 1;
    active.push_back(worst);
  }
  throw std::logic_error("separation did not terminate");
}

}  // namespace

std::optional<Vec> vertex_witness(const std::vector<Vec>& cloud, int p_idx) {
  return separate(cloud, p_idx, std::nullopt);
}

std::optional<Vec> edge_witness(const std::vector<Vec>& cloud, int u_idx, int v_idx) {
  Vec dir = cloud[u_idx] - cloud[v_idx];
  if (dir.isZero()) throw std::invalid_argument("edge endpoints coincide");
  return separate(cloud, u_idx, dir, v_idx);
}

LpMaxResult lp_max(const std::vector<Vec>& points, const Vec& w) {
  if (points.empty()) throw std::invalid_argument("lp_max on empty point set");
  LpMaxResult r;
  r.value = w.dot(points[0]);
  for (int i = 1; i < static_cast<int>(points.size()); ++i) {
    Rat v = w.dot(points[i]);
    if (v > r.value) r.value = v;
  }
  for (int i = 0; i < static_cast<int>(points.size()); ++i) {
    if (w.dot(points[i]) == r.value) r.argmax.push_back(i);
  }
  return r;
}

VPolytope VPolytope::from_points(std::vector<Vec> pts) {
  if (pts.empty()) throw std::invalid_argument("polytope needs at least one point");
  std::sort(pts.begin(), pts.end(), vec_less);
  pts.erase(std::unique(pts.begin(), pts.end(), vec_eq), pts.end());

  VPolytope p;
  if (pts.size() == 1) {
    p.verts_ = pts;
    p.certs_.push_back(Vec::Zero(pts[0].size()));
    return p;
  }
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    auto w = vertex_witness(pts, i);
    if (!w) continue;
    p.verts_.push_back(pts[i]);
    p.certs_.push_back(*w);
  }
  return p;
}

VPolytope VPolytope::from_vertices(std::vector<Vec> verts, std::vector<Vec> certs) {
  if (verts.empty() || verts.size() != certs.size())
    throw std::invalid_argument("vertex/certificate mismatch");
  std::vector<int> idx(verts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return vec_less(verts[a], verts[b]); });
  VPolytope p;
  for (int i : idx) {
    p.verts_.push_back(std::move(verts[i]));
    p.certs_.push_back(std::move(certs[i]));
  }
  for (std::size_t i = 0; i < p.verts_.size(); ++i) {
    for (std::size_t j = 0; j < p.verts_.size(); ++j) {
      if (i == j) continue;
      if (vec_eq(p.verts_[i], p.verts_[j]))
        throw std::invalid_argument("duplicate vertices");
      if (p.verts_.size() > 1 && p.certs_[i].dot(p.verts_[i] - p.verts_[j]) <= 0)
        throw std::invalid_argument("vertex certificate fails");
    }
  }
  return p;
}

int VPolytope::dim() const {
  if (dim_ == -2) dim_ = affine_dim(verts_);
  return dim_;
}

void VPolytope::set_edge_candidates(std::vector<std::pair<int, int>> cand) {
  edge_candidates_ = std::move(cand);
  edges_.reset();
}

const std::vector<EdgeCert>& VPolytope::edges() const {
  if (edges_) return *edges_;
  std::vector<std::pair<int, int>> cand;
  if (edge_candidates_) {
    cand = *edge_candidates_;
    for (auto& [a, b] : cand) {
      if (a > b) std::swap(a, b);
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  } else {
    for (int i = 0; i < static_cast<int>(verts_.size()); ++i)
      for (int j = i + 1; j < static_cast<int>(verts_.size()); ++j)
        cand.emplace_back(i, j);
  }
  edges_.emplace();
  for (auto [i, j] : cand) {
    auto w = edge_witness(verts_, i, j);
    if (w) edges_->push_back({i, j, *w});
  }
  return *edges_;
}

std::vector<std::vector<int>> VPolytope::adjacency() const {
  std::vector<std::vector<int>> adj(verts_.size());
  for (const auto& e : edges()) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

bool VPolytope::is_simple() const {
  const int d = dim();
  for (const auto& row : adjacency()) {
    if (static_cast<int>(row.size()) != d) return false;
  }
  return true;
}

VPolytope minkowski_sum(const VPolytope& a, const VPolytope& b) {
  std::vector<Vec> pts;
  pts.reserve(a.vertices().size() * b.vertices().size());
  for (const auto& u : a.vertices())
    for (const auto& v : b.vertices()) pts.push_back(u + v);
  return VPolytope::from_points(std::move(pts));
}

VPolytope minkowski_sum(const std::vector<VPolytope>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty Minkowski sum");
  VPolytope acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = minkowski_sum(acc, parts[i]);
  return acc;
}

namespace {

FaceLattice close_under_intersection(const VPolytope& p,
                                     std::set<std::vector<int>> facets) {
  const int n = static_cast<int>(p.vertices().size());
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;

  std::set<std::vector<int>> faces;
  faces.insert(all);
  std::vector<std::vector<int>> work(facets.begin(), facets.end());
  for (std::size_t k = 0; k < work.size(); ++k) {
    std::vector<int> f = work[k];
    if (!faces.insert(f).second) continue;
    for (const auto& g : facets) {
      std::vector<int> h;
      std::set_intersection(f.begin(), f.end(), g.begin(), g.end(),
                            std::back_inserter(h));
      if (!h.empty() && !faces.count(h)) work.push_back(h);
    }
  }

  FaceLattice lat;
  lat.dim = p.dim();
  for (const auto& f : faces) {
    std::vector<Vec> pts;
    for (int i : f) pts.push_back(p.vertices()[i]);
    lat.faces.push_back(f);
    lat.face_dim.push_back(affine_dim(pts));
  }
  std::vector<int> order(lat.faces.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (lat.face_dim[x] != lat.face_dim[y]) return lat.face_dim[x] < lat.face_dim[y];
    return lat.faces[x] < lat.faces[y];
  });
  FaceLattice out;
  out.dim = lat.dim;
  for (int i : order) {
    out.faces.push_back(lat.faces[i]);
    out.face_dim.push_back(lat.face_dim[i]);
  }
  return out;
}

}  // namespace

std::vector<long> FaceLattice::f_vector() const {
  std::vector<long> f(std::max(dim, 0), 0);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (face_dim[i] >= 0 && face_dim[i] < dim) ++f[face_dim[i]];
  }
  return f;
}

FaceLattice face_lattice(const VPolytope& p) {
  const auto& verts = p.vertices();
  const int n = static_cast<int>(verts.size());
  const int d = p.dim();
  if (d <= 0) {
    FaceLattice lat;
    lat.dim = d;
    lat.faces.push_back({0});
    lat.face_dim.push_back(0);
    return lat;
  }
  const int m = static_cast<int>(verts[0].size());

  double combos = 1;
  for (int i = 0; i < d; ++i) combos *= static_cast<double>(n - i) / (i + 1);
  if (combos > 500000.0)
    throw std::runtime_error("face lattice: vertex/dimension combination too large");

  Mat dirs(n - 1, m);
  for (int i = 1; i < n; ++i) dirs.row(i - 1) = (verts[i] - verts[0]).transpose();
  Mat basis = row_basis(dirs);  // d x m

  std::set<std::vector<int>> facet_sets;
  std::vector<int> pick(d);
  for (int i = 0; i < d; ++i) pick[i] = i;
  while (true) {
    Mat sub(d - 1, d);
    for (int i = 1; i < d; ++i)
      sub.row(i - 1) =
          ((verts[pick[i]] - verts[pick[0]]).transpose() * basis.transpose());
    Mat ker = kernel_basis(sub);
    if (ker.cols() == 1) {
      Vec w = basis.transpose() * ker.col(0);
      Rat ref = w.dot(verts[pick[0]]);
      bool all_le = true, all_ge = true;
      std::vector<int> tight;
      for (int i = 0; i < n; ++i) {
        Rat v = w.dot(verts[i]);
        if (v > ref) all_le = false;
        if (v < ref) all_ge = false;
        if (v == ref) tight.push_back(i);
      }
      if (all_le != all_ge && (all_le || all_ge)) {
        std::vector<Vec> pts;
        for (int i : tight) pts.push_back(verts[i]);
        if (affine_dim(pts) == d - 1) facet_sets.insert(tight);
      }
    }
    int pos = d - 1;
    while (pos >= 0 && pick[pos] == n - d + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int i = pos + 1; i < d; ++i) pick[i] = pick[i - 1] + 1;
  }
  return close_under_intersection(p, std::move(facet_sets));
}

FaceLattice face_lattice_from_facets(const VPolytope& p,
                                     const std::vector<std::vector<int>>& facets) {
  std::set<std::vector<int>> fs;
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    fs.insert(f);
  }
  return close_under_intersection(p, std::move(fs));
}

bool normal_fan_refines_lp(const VPolytope& fine, const VPolytope& coarse) {
  const auto fine_adj = fine.adjacency();
  const auto coarse_adj = coarse.adjacency();
  const int m = fine.ambient_dim();
  for (int vi = 0; vi < static_cast<int>(fine.vertices().size()); ++vi) {
    const Vec& w = fine.vertex_certificate(vi);
    auto top = lp_max(coarse.vertices(), w);
    if (top.argmax.size() != 1) return false;
    const int qi = top.argmax[0];

    // Minimize <w', q - q'> over the cone {w' : <w', v - u> >= 0 for
    // neighbors u of v}; a negative optimum exhibits a coarse wall cutting
    // through the fine cone.
    for (int qj : coarse_adj[qi]) {
      LinearProgram lp(m);
      lp.objective = -(coarse.vertices()[qi] - coarse.vertices()[qj]);
      for (int u : fine_adj[vi])
        lp.add_row(fine.vertices()[vi] - fine.vertices()[u], Rel::Ge, Rat(0));
      for (int j = 0; j < m; ++j) {
        Vec box = Vec::Zero(m);
        box[j] = 1;
        lp.add_row(box, Rel::Le, Rat(1));
        lp.add_row(box, Rel::Ge, Rat(-1));
      }
      auto res = lp_solve(lp);
      if (res.status != LpStatus::Optimal)
        throw std::logic_error("cone containment LP not optimal");
      if (res.value > 0) return false;
    }
  }
  return true;
}

bool normal_equivalent_lp(const VPolytope& p, const VPolytope& q) {
  return normal_fan_refines_lp(p, q) && normal_fan_refines_lp(q, p);
}

}  // namespace flagpoly
