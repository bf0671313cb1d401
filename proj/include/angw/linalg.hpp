#pragma once

#include <vector>

#include "angw/scalar.hpp"

namespace angw {

/// Dense exact matrix over Scalar, sized for the small kernel/rank
/// computations of the homology and uniqueness checks.
class QMatrix {
 public:
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows, std::vector<Scalar>(cols)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int i, int j) { return a_[i][j]; }
  const Scalar& at(int i, int j) const { return a_[i][j]; }

  int rank() const;

  /// Basis of the right kernel (vectors v with M v = 0).
  std::vector<std::vector<Scalar>> kernel_basis() const;

  Scalar determinant() const;  // square only

 private:
  int rows_, cols_;
  std::vector<std::vector<Scalar>> a_;
};

}  // namespace angw
