#include "fif/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fif::oracle {

namespace {

// Plain O(n^3) Gaussian elimination with partial pivoting, kept local so the
// oracles stay independent of the library solver.
std::vector<double> gauss_solve(std::vector<std::vector<double>> a,
                                std::vector<double> b, double rel_tol,
                                const char* context) {
  const std::size_t n = a.size();
  double diag_scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) diag_scale = std::max(diag_scale, std::abs(a[i][i]));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t i = col + 1; i < n; ++i) {
      if (std::abs(a[i][col]) > std::abs(a[pivot][col])) pivot = i;
    }
    if (!(std::abs(a[pivot][col]) > rel_tol * diag_scale)) {
      throw std::runtime_error(std::string(context) + ": matrix is rank deficient");
    }
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t i = col + 1; i < n; ++i) {
      const double factor = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= factor * a[col][j];
      b[i] -= factor * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t ri = n; ri-- > 0;) {
    double v = b[ri];
    for (std::size_t j = ri + 1; j < n; ++j) v -= a[ri][j] * x[j];
    x[ri] = v / a[ri][ri];
  }
  return x;
}

}  // namespace

std::vector<double> hat_projection(const TargetFunction& f, const Partition& p,
                                   const QuadConfig& quad) {
  quad.validate();
  const std::size_t n = p.segments();
  const auto& x = p.nodes();

  // Tridiagonal hat mass matrix: diag (h_{i-1}+h_i)/3, off-diag h_i/6.
  std::vector<std::vector<double>> mass(n + 1, std::vector<double>(n + 1, 0.0));
  for (std::size_t i = 0; i <= n; ++i) {
    const double h_left = (i > 0) ? x[i] - x[i - 1] : 0.0;
    const double h_right = (i < n) ? x[i + 1] - x[i] : 0.0;
    mass[i][i] = (h_left + h_right) / 3.0;
    if (i < n) {
      mass[i][i + 1] = h_right / 6.0;
      mass[i + 1][i] = h_right / 6.0;
    }
  }

  // Load vector: each hat restricted to an element is affine.
  std::vector<double> load(n + 1, 0.0);
  for (std::size_t i = 0; i <= n; ++i) {
    double v = 0.0;
    if (i > 0) {
      v += integrate_against(f.fn, affine_through(x[i - 1], 0.0, x[i], 1.0),
                             x[i - 1], x[i], quad);
    }
    if (i < n) {
      v += integrate_against(f.fn, affine_through(x[i], 1.0, x[i + 1], 0.0),
                             x[i], x[i + 1], quad);
    }
    load[i] = v;
  }

  try {
    return gauss_solve(std::move(mass), std::move(load), 1e-14, "hat_projection");
  } catch (const std::runtime_error&) {
    throw std::logic_error("hat_projection: singular mass matrix for a valid partition");
  }
}

std::vector<double> dense_sampled_lsq(const TargetFunction& f,
                                      const CardinalBasis& basis,
                                      std::size_t grid_size, const EvalConfig& eval) {
  eval.validate();
  const std::size_t dim = basis.size();
  const std::size_t n = basis.partition().segments();
  if (grid_size < 10 * dim) {
    throw std::invalid_argument("dense_sampled_lsq needs grid_size >= 10*(N+1), got " +
                                std::to_string(grid_size));
  }

  // Deepen the address grid until it reaches the requested size; the grid is
  // identical across basis functions, so the design columns line up exactly.
  int depth = eval.depth;
  std::size_t points = n + 1;
  for (int d = 0; d < depth; ++d) points = n * points - (n - 1);
  while (points < grid_size) {
    points = n * points - (n - 1);
    ++depth;
  }

  std::vector<std::vector<Sample>> columns(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    columns[k] = sample_fixed_point(basis[k], basis.scales(), basis.partition(),
                                    depth, points + 1);
  }

  // Normal equations of the sampled design, accumulated the obvious way.
  std::vector<std::vector<double>> gram(dim, std::vector<double>(dim, 0.0));
  std::vector<double> rhs(dim, 0.0);
  const std::size_t m = columns[0].size();
  for (std::size_t i = 0; i < m; ++i) {
    const double y = f(columns[0][i].x);
    for (std::size_t k = 0; k < dim; ++k) {
      const double phik = columns[k][i].value;
      rhs[k] += phik * y;
      for (std::size_t j = k; j < dim; ++j) {
        gram[k][j] += phik * columns[j][i].value;
      }
    }
  }
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t j = 0; j < k; ++j) gram[k][j] = gram[j][k];
  }

  return gauss_solve(std::move(gram), std::move(rhs), 1e-10, "dense_sampled_lsq");
}

}  // namespace fif::oracle
