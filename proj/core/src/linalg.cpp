#include "fif/linalg.hpp"

#include <cmath>
#include <limits>

namespace fif {

bool cholesky_factor(Matrix& a, double pivot_floor, double& min_pivot) {
  const std::size_t n = a.rows();
  min_pivot = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= a(j, k) * a(j, k);
    min_pivot = std::min(min_pivot, d);
    if (!(d > pivot_floor)) return false;
    const double ljj = std::sqrt(d);
    a(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double v = a(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= a(i, k) * a(j, k);
      a(i, j) = v / ljj;
    }
  }
  return true;
}

std::vector<double> cholesky_solve(const Matrix& lower, std::vector<double> rhs) {
  const std::size_t n = lower.rows();
  for (std::size_t i = 0; i < n; ++i) {
    double v = rhs[i];
    for (std::size_t k = 0; k < i; ++k) v -= lower(i, k) * rhs[k];
    rhs[i] = v / lower(i, i);
  }
  for (std::size_t ri = n; ri-- > 0;) {
    double v = rhs[ri];
    for (std::size_t k = ri + 1; k < n; ++k) v -= lower(k, ri) * rhs[k];
    rhs[ri] = v / lower(ri, ri);
  }
  return rhs;
}

std::vector<double> lu_solve(Matrix a, std::vector<double> rhs, double pivot_floor) {
  const std::size_t n = a.rows();
  double smallest = std::numeric_limits<double>::infinity();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot_row = col;
    double best = std::abs(a(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (std::abs(a(i, col)) > best) {
        best = std::abs(a(i, col));
        pivot_row = i;
      }
    }
    smallest = std::min(smallest, best);
    if (!(best > pivot_floor)) {
      throw SingularMatrixError(
          "matrix is singular to tolerance: smallest pivot " + std::to_string(best) +
              " at column " + std::to_string(col),
          best);
    }
    if (pivot_row != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot_row, j));
      std::swap(rhs[col], rhs[pivot_row]);
    }
    for (std::size_t i = col + 1; i < n; ++i) {
      const double factor = a(i, col) / a(col, col);
      a(i, col) = 0.0;
      for (std::size_t j = col + 1; j < n; ++j) a(i, j) -= factor * a(col, j);
      rhs[i] -= factor * rhs[col];
    }
  }
  for (std::size_t ri = n; ri-- > 0;) {
    double v = rhs[ri];
    for (std::size_t j = ri + 1; j < n; ++j) v -= a(ri, j) * rhs[j];
    rhs[ri] = v / a(ri, ri);
  }
  return rhs;
}

}  // namespace fif
