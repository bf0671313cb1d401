#include "angw/linalg.hpp"

namespace angw {

namespace {

// Row echelon in place; returns pivot columns.
std::vector<int> echelon(std::vector<std::vector<Scalar>>& a, int rows, int cols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!a[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    Scalar inv = Scalar(1) / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int QMatrix::rank() const {
  auto a = a_;
  return static_cast<int>(echelon(a, rows_, cols_).size());
}

std::vector<std::vector<Scalar>> QMatrix::kernel_basis() const {
  auto a = a_;
  std::vector<int> pivots = echelon(a, rows_, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_);
    v[free] = Scalar(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar QMatrix::determinant() const {
  if (rows_ != cols_) throw UsageError("determinant: matrix not square");
  auto a = a_;
  Scalar det(1);
  for (int c = 0; c < cols_; ++c) {
    int p = -1;
    for (int i = c; i < rows_; ++i)
      if (!a[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Scalar(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    Scalar inv = Scalar(1) / a[c][c];
    for (int i = c + 1; i < rows_; ++i) {
      if (a[i][c].is_zero()) continue;
      Scalar f = a[i][c] * inv;
      for (int j = c; j < cols_; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

}  // namespace angw
