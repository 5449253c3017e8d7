#include "flagpoly/polymatroid.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "flagpoly/linalg.hpp"

namespace flagpoly {

GroundSet GroundSet::of_size(int n) {
  if (n < 0 || n > kMaxGround) throw std::invalid_argument("ground set size out of range");
  GroundSet g;
  g.n = n;
  for (int i = 1; i <= n; ++i) g.labels.push_back(std::to_string(i));
  return g;
}

GroundSet GroundSet::with_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) > kMaxGround)
    throw std::invalid_argument("ground set size out of range");
  GroundSet g;
  g.n = static_cast<int>(labels.size());
  g.labels = std::move(labels);
  return g;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid";
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += v.axiom + " violated at (" + subset_to_string(v.a) + ", " + subset_to_string(v.b) + ")";
  }
  return s;
}

Polymatroid::Polymatroid(GroundSet g, std::vector<Rat> values)
    : ground_(std::move(g)), values_(std::move(values)) {
  if (ground_.n < 0 || ground_.n > kMaxGround)
    throw std::invalid_argument("ground set size out of range");
  if (values_.size() != (size_t(1) << ground_.n))
    throw std::invalid_argument("value table size must be 2^n");
}

ValidationReport validate(const Polymatroid& f) {
  ValidationReport rep;
  const int n = f.n();
  if (f.value(0) != 0) rep.violations.push_back({"normalized", 0, 0});
  for (Subset a = 0; a < (Subset(1) << n); ++a) {
    if (f.value(a) < 0) rep.violations.push_back({"nonnegative", a, a});
    for (int e = 0; e < n; ++e) {
      if (contains(a, e)) continue;
      if (f.value(a) > f.value(with(a, e)))
        rep.violations.push_back({"monotone", a, with(a, e)});
      for (int g = e + 1; g < n; ++g) {
        if (contains(a, g)) continue;
        // local diminishing-returns form of submodularity
        if (f.value(with(a, e)) + f.value(with(a, g)) <
            f.value(with(with(a, e), g)) + f.value(a))
          rep.violations.push_back({"submodular", with(a, e), with(a, g)});
      }
    }
  }
  return rep;
}

Subset closure(const Polymatroid& f, Subset a) {
  Subset c = a;
  for (int e = 0; e < f.n(); ++e) {
    if (contains(a, e)) continue;
    if (f.value(with(a, e)) == f.value(a)) c = with(c, e);
  }
  return c;
}

bool is_flat(const Polymatroid& f, Subset a) {
  for (int e = 0; e < f.n(); ++e) {
    if (contains(a, e)) continue;
    if (f.value(with(a, e)) == f.value(a)) return false;
  }
  return true;
}

int LatticeOfFlats::index_of(Subset f) const {
  for (size_t i = 0; i < flats.size(); ++i)
    if (flats[i] == f) return static_cast<int>(i);
  return -1;
}

LatticeOfFlats flats(const Polymatroid& f) {
  LatticeOfFlats lat;
  for (Subset a = 0; a < (Subset(1) << f.n()); ++a)
    if (is_flat(f, a)) lat.flats.push_back(a);
  std::sort(lat.flats.begin(), lat.flats.end(), [](Subset x, Subset y) {
    int px = popcount(x), py = popcount(y);
    return px != py ? px < py : x < y;
  });
  std::unordered_map<Subset, int> idx;
  for (size_t i = 0; i < lat.flats.size(); ++i) idx[lat.flats[i]] = static_cast<int>(i);

  lat.covers.resize(lat.flats.size());
  for (size_t i = 0; i < lat.flats.size(); ++i) {
    Subset F = lat.flats[i];
    std::vector<Subset> cand;
    for (int e = 0; e < f.n(); ++e) {
      if (contains(F, e)) continue;
      Subset c = closure(f, with(F, e));
      if (std::find(cand.begin(), cand.end(), c) == cand.end()) cand.push_back(c);
    }
    for (Subset c : cand) {
      bool minimal = true;
      for (Subset d : cand) {
        if (d != c && (d & c) == d) {
          minimal = false;
          break;
        }
      }
      if (minimal) lat.covers[i].push_back(idx.at(c));
    }
    std::sort(lat.covers[i].begin(), lat.covers[i].end());
  }
  return lat;
}

bool is_separable_flat(const Polymatroid& f, Subset flat,
                       std::pair<Subset, Subset>* parts) {
  if (flat == 0) return false;
  const int low = elements_of(flat).front();
  bool found = false;
  for_each_subset_of(flat, [&](Subset sub) {
    if (found || sub == 0 || sub == flat || !contains(sub, low)) return;
    Subset other = flat & ~sub;
    if (is_flat(f, sub) && is_flat(f, other) &&
        f.value(sub) + f.value(other) == f.value(flat)) {
      found = true;
      if (parts) *parts = {sub, other};
    }
  });
  return found;
}

Polymatroid truncate(const Polymatroid& f, const Rat& cap) {
  if (cap < 0) throw std::invalid_argument("truncation cap must be nonnegative");
  std::vector<Rat> v = f.values();
  for (Rat& x : v)
    if (x > cap) x = cap;
  return Polymatroid(f.ground(), std::move(v));
}

Polymatroid extend(const Polymatroid& f) {
  const int n = f.n();
  if (n + 1 > kMaxGround) throw std::invalid_argument("extension exceeds ground set cap");
  GroundSet g = f.ground();
  g.n = n + 1;
  g.labels.push_back(std::to_string(n + 1) + "*");
  std::vector<Rat> v(size_t(1) << (n + 1));
  const Subset top = Subset(1) << n;
  for (Subset a = 0; a < top; ++a) {
    v[a] = f.value(a);
    v[a | top] = f.rank();
  }
  return Polymatroid(std::move(g), std::move(v));
}

Polymatroid scale(const Polymatroid& f, const Rat& alpha) {
  if (alpha < 0) throw std::invalid_argument("scale factor must be nonnegative");
  std::vector<Rat> v = f.values();
  for (Rat& x : v) x *= alpha;
  return Polymatroid(f.ground(), std::move(v));
}

Polymatroid iterate_flag(const Polymatroid& f, int steps) {
  if (f.rank() == 0) throw std::invalid_argument("iterate_flag requires f(E) > 0");
  std::vector<Rat> v = f.values();
  for (Rat& x : v) x /= f.rank();
  for (int s = 0; s < steps; ++s)
    for (Rat& x : v) x = 2 * x - x * x;
  return Polymatroid(f.ground(), std::move(v));
}

bool flag_iteration_within(const Polymatroid& f, int steps, const Rat& bound) {
  if (f.rank() == 0) throw std::invalid_argument("requires f(E) > 0");
  if (bound <= 0) throw std::invalid_argument("bound must be positive");
  if (bound >= 1) return true;
  constexpr unsigned prec = 192;
  const Int one_shift = Int(1) << prec;
  // target = 1/bound; we must certify (1/(1 - f(A)/f(E)))^(2^steps) >= target
  const Int tnum = bound.get_den();
  const Int tden = bound.get_num();
  const Int tnum_shift = tnum << prec;
  for (Subset a = 1; a < (Subset(1) << f.n()); ++a) {
    Rat fa = f.value(a) / f.rank();
    if (fa > 1 || fa < 0) throw std::invalid_argument("not monotone/nonnegative");
    if (fa == 1) continue;
    if (fa == 0) return false;
    Rat y = 1 / (1 - fa);
    // fixed-point lower bound M/2^prec <= y^(2^k), floor-rounded each square
    Int m = (y.get_num() << prec) / y.get_den();
    bool ok = false;
    for (int k = 0;; ++k) {
      if (m * tden >= tnum_shift) {
        ok = true;
        break;
      }
      if (k == steps) break;
      m = (m * m) >> prec;
      if (m < one_shift) break;  // rounded below 1; cannot certify
    }
    if (!ok) return false;
  }
  return true;
}

bool is_tight(const Polymatroid& f) {
  const Subset full = f.full();
  for (int e = 0; e < f.n(); ++e)
    if (f.value(without(full, e)) != f.rank()) return false;
  return true;
}

Polymatroid boolean_polymatroid(int n) {
  GroundSet g = GroundSet::of_size(n);
  std::vector<Rat> v(size_t(1) << n);
  for (Subset a = 0; a < (Subset(1) << n); ++a) v[a] = popcount(a);
  return Polymatroid(std::move(g), std::move(v));
}

namespace {
Polymatroid interval_hit_polymatroid(int n, int min_len) {
  GroundSet g = GroundSet::of_size(n);
  std::vector<Subset> intervals;
  for (int i = 0; i < n; ++i)
    for (int j = i + min_len - 1; j < n; ++j) {
      Subset m = 0;
      for (int e = i; e <= j; ++e) m = with(m, e);
      intervals.push_back(m);
    }
  std::vector<Rat> v(size_t(1) << n);
  for (Subset a = 0; a < (Subset(1) << n); ++a) {
    long cnt = 0;
    for (Subset iv : intervals)
      if (iv & a) ++cnt;
    v[a] = cnt;
  }
  return Polymatroid(std::move(g), std::move(v));
}
}  // namespace

Polymatroid associahedron_polymatroid(int n) { return interval_hit_polymatroid(n, 1); }

Polymatroid tight_associahedron_polymatroid(int n) {
  return interval_hit_polymatroid(n, 2);
}

Polymatroid from_subspaces(const Mat& columns,
                           const std::vector<std::vector<int>>& blocks) {
  const int n = static_cast<int>(blocks.size());
  GroundSet g = GroundSet::of_size(n);
  std::vector<Rat> v(size_t(1) << n);
  for (Subset a = 0; a < (Subset(1) << n); ++a) {
    std::vector<int> cols;
    for (int e = 0; e < n; ++e)
      if (contains(a, e)) cols.insert(cols.end(), blocks[e].begin(), blocks[e].end());
    if (cols.empty()) {
      v[a] = 0;
      continue;
    }
    Mat sub(columns.rows(), cols.size());
    for (size_t c = 0; c < cols.size(); ++c) sub.col(c) = columns.col(cols[c]);
    v[a] = rank_gauss(sub.transpose());
  }
  return Polymatroid(std::move(g), std::move(v));
}

Polymatroid top_sum_polymatroid(int m, int n) {
  GroundSet g = GroundSet::of_size(m);
  std::vector<long> top(m + 1, 0);
  for (int k = 1; k <= m; ++k) top[k] = top[k - 1] + std::max(n - (k - 1), 0);
  std::vector<Rat> v(size_t(1) << m);
  for (Subset a = 0; a < (Subset(1) << m); ++a) v[a] = top[popcount(a)];
  return Polymatroid(std::move(g), std::move(v));
}

Polymatroid partial_perm_rank(int m, int n) {
  GroundSet g = GroundSet::of_size(m);
  std::vector<Rat> v(size_t(1) << m);
  for (Subset a = 0; a < (Subset(1) << m); ++a) v[a] = std::min(popcount(a), n);
  return extend(Polymatroid(std::move(g), std::move(v)));
}

}  // namespace flagpoly
