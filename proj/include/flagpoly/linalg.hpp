#pragma once

#include <vector>

#include "flagpoly/rational.hpp"

namespace flagpoly {

// Row-echelon rank by exact Gaussian elimination.
template <typename Derived>
int rank_gauss(const Eigen::MatrixBase<Derived>& m_in) {
  Mat m = m_in;
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
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
    for (int r = rank + 1; r < rows; ++r) {
      if (m(r, c) != 0) {
        Rat f = m(r, c) / m(rank, c);
        m.row(r) -= f * m.row(rank);
      }
    }
    ++rank;
  }
  return rank;
}

// Dimension of the affine hull of a point list (-1 for the empty list).
int affine_dim(const std::vector<Vec>& points);

// Columns spanning the kernel of a.
Mat kernel_basis(const Mat& a);

// Maximal linearly independent subset of the rows of a, as a matrix.
Mat row_basis(const Mat& a);

}  // namespace flagpoly
