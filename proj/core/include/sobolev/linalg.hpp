#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sobolev/scalar.hpp"

namespace sobolev {

/// Dense row-major matrix of Scalars.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, Mode mode)
      : rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(mode)) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> operator*(const std::vector<Scalar>& v) const;
  Matrix to_mode(Mode mode) const;
  std::string str() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

/// Solves A x = b. Exact mode clears denominators row by row and runs
/// fraction-free (Bareiss) elimination over the integers; float mode uses
/// Gaussian elimination with partial pivoting. Throws SingularMatrix.
std::vector<Scalar> solve_linear(const Matrix& a, const std::vector<Scalar>& b);

/// For symmetric positive definite G with G = L D L^T and L y = r, returns
/// the prefix sums sum_{i<=n} y_i^2 / d_i, i.e. r_n^T G_n^{-1} r_n for every
/// leading block. Exact mode only; throws SingularMatrix on a non-positive pivot.
std::vector<Scalar> nested_dual_norms(const Matrix& g, const std::vector<Scalar>& r);

}  // namespace sobolev
