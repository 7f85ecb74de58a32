#pragma once

#include <cstddef>
#include <vector>

#include "fif/basis.hpp"
#include "fif/collage_fit.hpp"
#include "fif/fixed_point.hpp"
#include "fif/quadrature.hpp"

// Deliberately naive reference implementations used by tests to cross-check
// the main fitting path. They share no assembly or solver code with it.
namespace fif::oracle {

/// Classical L2 projection onto the piecewise-linear hat basis of the
/// partition: tridiagonal mass matrix and load vector assembled from
/// hat-function formulas directly, solved by plain Gaussian elimination.
/// The s = 0 collage fit must reproduce these coefficients.
std::vector<double> hat_projection(const TargetFunction& f, const Partition& p,
                                   const QuadConfig& quad);

/// Discrete least squares against the basis functions sampled exactly on an
/// address grid with at least `grid_size` points. Approximates the true-norm
/// best approximation directly, independent of the collage objective.
std::vector<double> dense_sampled_lsq(const TargetFunction& f,
                                      const CardinalBasis& basis,
                                      std::size_t grid_size, const EvalConfig& eval);

}  // namespace fif::oracle
