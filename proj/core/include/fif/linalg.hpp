#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fif {

/// Dense row-major matrix; sized for the small systems assembled here.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double value = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, value) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Raised when a factorization meets a pivot too small to trust.
class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(const std::string& what, double smallest_pivot)
      : std::runtime_error(what), smallest_pivot_(smallest_pivot) {}

  double smallest_pivot() const { return smallest_pivot_; }

 private:
  double smallest_pivot_;
};

/// Attempts an in-place lower Cholesky factorization of the symmetric matrix
/// `a`. Returns false (leaving `min_pivot` at the offending value) if any
/// pivot drops below `pivot_floor`; on success `min_pivot` is the smallest
/// diagonal pivot before its square root.
bool cholesky_factor(Matrix& a, double pivot_floor, double& min_pivot);

/// Solves L L^T x = rhs given the lower factor produced by cholesky_factor.
std::vector<double> cholesky_solve(const Matrix& lower, std::vector<double> rhs);

/// Gaussian elimination with partial pivoting; throws SingularMatrixError
/// when the best available pivot falls below `pivot_floor` in magnitude.
std::vector<double> lu_solve(Matrix a, std::vector<double> rhs, double pivot_floor);

}  // namespace fif
