#include "flagpoly/syt.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "flagpoly/linprog.hpp"

namespace flagpoly {

namespace {

long factorial(int n) {
  long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

Tableau make_tableau(std::vector<std::vector<int>> rows) {
  Tableau t;
  t.m = int(rows.size());
  if (t.m == 0 || rows[0].empty())
    throw std::invalid_argument("tableau must be a nonempty rectangle");
  t.n = int(rows[0].size());
  for (const auto& r : rows)
    if (int(r.size()) != t.n)
      throw std::invalid_argument("tableau rows must have equal length");

  std::vector<char> seen(std::size_t(t.m) * t.n + 1, 0);
  for (const auto& r : rows)
    for (int e : r) {
      if (e < 1 || e > t.m * t.n || seen[e])
        throw std::invalid_argument("entries must be a permutation of 1..m*n");
      seen[e] = 1;
    }
  for (int i = 0; i < t.m; ++i)
    for (int j = 0; j < t.n; ++j) {
      if (j > 0 && rows[i][j - 1] >= rows[i][j])
        throw std::invalid_argument("rows must increase left to right");
      if (i > 0 && rows[i - 1][j] >= rows[i][j])
        throw std::invalid_argument("columns must increase top to bottom");
    }
  t.rows = std::move(rows);
  return t;
}

std::vector<Tableau> enumerate_syt(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("shape must be positive");
  if (m * n > 20)
    throw std::invalid_argument("tableau enumeration is capped at 20 cells");
  std::vector<Tableau> out;
  std::vector<std::vector<int>> rows(m);
  auto place = [&](auto&& self, int val) -> void {
    if (val > m * n) {
      Tableau t;
      t.m = m;
      t.n = n;
      t.rows = rows;
      out.push_back(std::move(t));
      return;
    }
    for (int r = 0; r < m; ++r) {
      if (int(rows[r].size()) == n) continue;
      if (r > 0 && rows[r - 1].size() <= rows[r].size()) continue;
      rows[r].push_back(val);
      self(self, val + 1);
      rows[r].pop_back();
    }
  };
  place(place, 1);
  return out;
}

mpz_class hook_count(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("shape must be positive");
  mpz_class num = 1, den = 1;
  for (int i = 2; i <= m * n; ++i) num *= i;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) den *= (m - i) + (n - j) - 1;
  return num / den;
}

std::vector<int> word_from_tableau(const Tableau& t) {
  std::vector<int> w(std::size_t(t.m) * t.n);
  for (int i = 0; i < t.m; ++i)
    for (int j = 0; j < t.n; ++j) w[t.rows[i][j] - 1] = i + 1;
  return w;
}

Tableau tableau_from_word(int m, int n, const std::vector<int>& word) {
  if (m < 1 || n < 1) throw std::invalid_argument("shape must be positive");
  if (int(word.size()) != m * n)
    throw std::invalid_argument("word length must be m*n");
  std::vector<std::vector<int>> rows(m);
  std::vector<int> cnt(m + 1, 0);
  for (std::size_t h = 0; h < word.size(); ++h) {
    const int r = word[h];
    if (r < 1 || r > m) throw std::invalid_argument("letter out of range");
    if (++cnt[r] > n)
      throw std::invalid_argument("letter " + std::to_string(r) +
                                  " appears more than n times");
    if (r > 1 && cnt[r] > cnt[r - 1])
      throw std::invalid_argument("prefix dominance fails at position " +
                                  std::to_string(h + 1));
    rows[r - 1].push_back(int(h) + 1);
  }
  return make_tableau(std::move(rows));
}

std::vector<std::vector<int>> path_from_tableau(const Tableau& t) {
  const int k = t.m, n = t.m + t.n;
  std::vector<int> sigma(n);
  for (int i = 0; i < n; ++i) sigma[i] = i + 1;
  std::vector<std::vector<int>> path{sigma};
  for (int a : word_from_tableau(t)) {
    const int pos = k - a;  // 1-based coordinate k + 1 - a
    const int x = sigma[pos];
    const auto other = std::find(sigma.begin(), sigma.end(), x + 1);
    std::iter_swap(sigma.begin() + pos, other);
    path.push_back(sigma);
  }
  return path;
}

Tableau tableau_from_path(int m, const std::vector<std::vector<int>>& path) {
  if (path.empty()) throw std::invalid_argument("path is empty");
  const int n = int(path[0].size());
  if (m < 1 || m >= n)
    throw std::invalid_argument("objective must sum a proper coordinate prefix");
  for (int i = 0; i < n; ++i)
    if (path[0][i] != i + 1)
      throw std::invalid_argument("path must start at (1, ..., n)");

  std::vector<int> word;
  for (std::size_t h = 1; h < path.size(); ++h) {
    const auto& a = path[h - 1];
    const auto& b = path[h];
    if (int(b.size()) != n) throw std::invalid_argument("point sizes differ");
    int up = -1, down = -1;
    for (int i = 0; i < n; ++i) {
      if (b[i] == a[i]) continue;
      if (b[i] == a[i] + 1 && up < 0)
        up = i;
      else if (b[i] == a[i] - 1 && down < 0)
        down = i;
      else
        throw std::invalid_argument("step " + std::to_string(h) +
                                    " is not a swap of consecutive values");
    }
    if (up < 0 || down < 0 || a[down] != a[up] + 1)
      throw std::invalid_argument("step " + std::to_string(h) +
                                  " is not a swap of consecutive values");
    if (up >= m || down < m)
      throw std::invalid_argument("step " + std::to_string(h) +
                                  " does not raise the first " +
                                  std::to_string(m) + " coordinates");
    word.push_back(m - up);
  }
  return tableau_from_word(m, n - m, word);
}

bool realizes(const Tableau& t, const Vec& u, const Vec& v) {
  if (int(u.size()) != t.m || int(v.size()) != t.n) return false;
  for (int i = 1; i < t.m; ++i)
    if (u[i] <= u[i - 1]) return false;
  for (int j = 1; j < t.n; ++j)
    if (v[j] <= v[j - 1]) return false;
  std::vector<std::pair<Rat, int>> cells;
  for (int i = 0; i < t.m; ++i)
    for (int j = 0; j < t.n; ++j) cells.push_back({u[i] + v[j], t.rows[i][j]});
  std::sort(cells.begin(), cells.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t r = 0; r < cells.size(); ++r) {
    if (r > 0 && cells[r - 1].first == cells[r].first) return false;
    if (cells[r].second != int(r) + 1) return false;
  }
  return true;
}

std::optional<std::pair<Vec, Vec>> is_realizable(const Tableau& t) {
  const int m = t.m, n = t.n, d = m + n;
  std::vector<std::pair<int, int>> at(std::size_t(m) * n + 1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) at[t.rows[i][j]] = {i, j};

  std::vector<Vec> strict;
  for (int val = 1; val < m * n; ++val) {
    Vec row = Vec::Zero(d);
    row[at[val + 1].first] += 1;
    row[m + at[val + 1].second] += 1;
    row[at[val].first] -= 1;
    row[m + at[val].second] -= 1;
    strict.push_back(std::move(row));
  }
  for (int i = 1; i < m; ++i) {
    Vec row = Vec::Zero(d);
    row[i] = 1;
    row[i - 1] = -1;
    strict.push_back(std::move(row));
  }
  for (int j = 1; j < n; ++j) {
    Vec row = Vec::Zero(d);
    row[m + j] = 1;
    row[m + j - 1] = -1;
    strict.push_back(std::move(row));
  }

  const auto w = strict_feasible(strict, d);
  if (!w) return std::nullopt;
  Vec u(m), v(n);
  for (int i = 0; i < m; ++i) u[i] = (*w)[i];
  for (int j = 0; j < n; ++j) v[j] = (*w)[m + j];
  if (!realizes(t, u, v))
    throw std::logic_error("realizability witness failed rank reconstruction");
  return std::make_pair(std::move(u), std::move(v));
}

long count_realizable(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("shape must be positive");
  if (m * n > 16)
    throw std::invalid_argument("realizability counting is capped at 16 cells");
  long count = 0;
  for (const Tableau& t : enumerate_syt(m, n))
    if (is_realizable(t)) ++count;
  return count;
}

long coherent_path_count(int n, int k) {
  if (k < 1 || k >= n)
    throw std::invalid_argument("coordinate count must satisfy 1 <= k < n");
  return factorial(k) * factorial(n - k) * count_realizable(k, n - k);
}

std::vector<PlaneBinaryTree> enumerate_plane_trees(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("tree size out of range");
  std::vector<PlaneBinaryTree> out;
  PlaneBinaryTree cur;
  cur.n = n;
  cur.left.assign(n, -1);
  cur.right.assign(n, -1);
  // Fills the interval [lo, hi), reports the root of that interval to `done`.
  auto build = [&](auto&& self, int lo, int hi, auto&& done) -> void {
    if (lo >= hi) {
      done(-1);
      return;
    }
    for (int r = lo; r < hi; ++r)
      self(self, lo, r, [&](int lroot) {
        cur.left[r] = lroot;
        self(self, r + 1, hi, [&](int rroot) {
          cur.right[r] = rroot;
          done(r);
        });
      });
  };
  build(build, 0, n, [&](int root) {
    cur.root = root;
    out.push_back(cur);
  });
  return out;
}

std::pair<std::vector<int>, std::vector<int>> subtree_sizes(
    const PlaneBinaryTree& t) {
  const int n = t.n;
  if (n < 1 || int(t.left.size()) != n || int(t.right.size()) != n)
    throw std::invalid_argument("malformed tree");
  std::vector<int> l(n, 0), r(n, 0);
  auto size_of = [&](auto&& self, int x) -> int {
    if (x < 0) return 0;
    l[x] = self(self, t.left[x]);
    r[x] = self(self, t.right[x]);
    return l[x] + r[x] + 1;
  };
  if (size_of(size_of, t.root) != n)
    throw std::invalid_argument("tree does not reach every node");
  return {l, r};
}

long tree_linear_extensions(const PlaneBinaryTree& t) {
  const auto [l, r] = subtree_sizes(t);
  long den = 1;
  for (int i = 0; i < t.n; ++i) den *= l[i] + r[i] + 1;
  return factorial(t.n) / den;
}

long forest_linear_extensions(const std::vector<int>& parent) {
  const int n = int(parent.size());
  if (n == 0) return 1;
  std::vector<long> size(n, 0);
  for (int j = 0; j < n; ++j) {
    int steps = 0;
    for (int cur = j; cur != -1; cur = parent[cur]) {
      if (cur < 0 || cur >= n || ++steps > n)
        throw std::invalid_argument("malformed parent map");
      ++size[cur];
    }
  }
  long den = 1;
  for (long s : size) den *= s;
  return factorial(n) / den;
}

Vec tree_vertex(const PlaneBinaryTree& t) {
  const auto [l, r] = subtree_sizes(t);
  Vec v(t.n);
  for (int i = 0; i < t.n; ++i) v[i] = Rat((l[i] + 1) * (r[i] + 1));
  return v;
}

long tight_associahedron_path_count(int n) {
  long total = 0;
  for (const PlaneBinaryTree& t : enumerate_plane_trees(n)) {
    std::vector<int> tparent(n, -1);
    for (int i = 0; i < n; ++i) {
      if (t.left[i] >= 0) tparent[t.left[i]] = i;
      if (t.right[i] >= 0) tparent[t.right[i]] = i;
    }
    std::vector<int> renum(n, -1);
    int kept = 0;
    for (int i = 0; i < n; ++i)
      if (t.left[i] >= 0 || t.right[i] >= 0) renum[i] = kept++;
    std::vector<int> stripped(kept, -1);
    for (int i = 0; i < n; ++i)
      if (renum[i] >= 0 && tparent[i] >= 0) stripped[renum[i]] = renum[tparent[i]];
    total += forest_linear_extensions(stripped);
  }
  return total;
}

}  // namespace flagpoly
