#include "flagpoly/linalg.hpp"

namespace flagpoly {

int affine_dim(const std::vector<Vec>& points) {
  if (points.empty()) return -1;
  Mat diffs(points.size() - 1, points[0].size());
  for (size_t i = 1; i < points.size(); ++i)
    diffs.row(i - 1) = (points[i] - points[0]).transpose();
  if (diffs.rows() == 0) return 0;
  return rank_gauss(diffs);
}

Mat kernel_basis(const Mat& a) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  Mat m = a;
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r) {
      if (m(r, c) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    m.row(rank).swap(m.row(piv));
    m.row(rank) /= m(rank, c);
    for (int r = 0; r < rows; ++r) {
      if (r != rank && m(r, c) != 0) m.row(r) -= m(r, c) * m.row(rank);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  Mat k = Mat::Zero(cols, cols - rank);
  int kcol = 0;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    k(c, kcol) = 1;
    for (int r = 0; r < rank; ++r) k(pivot_col[r], kcol) = -m(r, c);
    ++kcol;
  }
  return k;
}

Mat row_basis(const Mat& a) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  Mat m = a;
  std::vector<int> keep;
  int rank = 0;
  std::vector<int> row_of(rows);
  for (int r = 0; r < rows; ++r) row_of[r] = r;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r) {
      if (m(r, c) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    m.row(rank).swap(m.row(piv));
    std::swap(row_of[rank], row_of[piv]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m(r, c) != 0) m.row(r) -= (m(r, c) / m(rank, c)) * m.row(rank);
    }
    keep.push_back(row_of[rank]);
    ++rank;
  }
  std::sort(keep.begin(), keep.end());
  Mat b(rank, cols);
  for (int i = 0; i < rank; ++i) b.row(i) = a.row(keep[i]);
  return b;
}

}  // namespace flagpoly
