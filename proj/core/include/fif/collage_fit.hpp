#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fif/basis.hpp"
#include "fif/fixed_point.hpp"
#include "fif/linalg.hpp"
#include "fif/quadrature.hpp"

namespace fif {

/// A function to approximate, with a label for reporting.
struct TargetFunction {
  std::function<double(double)> fn;
  std::string label = "target";

  double operator()(double x) const { return fn(x); }
};

/// Normal equations A alpha = beta of the collage objective.
struct CollageSystem {
  Matrix gram;
  std::vector<double> rhs;
};

/// Fit output: coefficients plus the error certificate.
struct FitResult {
  std::vector<double> alpha;
  /// || f - Tf ||_L2 at the optimum, the square root of `objective`.
  double collage_residual = 0.0;
  /// c = max_l |s_l|.
  double contraction = 0.0;
  /// collage_residual / (1 - contraction); an upper bound on the true
  /// L2 distance between f and the fitted fixed point.
  double collage_bound = 0.0;
  /// || f - f_alpha ||_L2 measured by trapezoid on exact address samples.
  double measured_l2_error = 0.0;
  /// Largest continuity defect of the fitted approximant at interior nodes.
  double max_node_jump = 0.0;
  /// Objective value phi(alpha) at the optimum.
  double objective = 0.0;
  /// False when the measured error exceeds the collage bound by more than
  /// the quadrature slack, which would indicate an assembly defect.
  bool certificate_ok = true;
};

/// Allowance for quadrature and sampling error when cross-checking the
/// measured L2 error against the collage bound.
inline constexpr double kCertificateSlack = 1e-8;

/// Weighted Gram matrix A_kj = sum_l a_l * integral(lambda_l^(k) lambda_l^(j))
/// over [a, b]. Assembled from closed-form quadratic integrals, so exact to
/// rounding and symmetric.
Matrix gram_matrix(const CardinalBasis& basis);

/// Right-hand side beta_k = sum_l a_l * [ (lambda_l^(k), f o u_l) -
/// s_l (f, lambda_l^(k)) ], by composite Gauss-Legendre quadrature. Entries
/// are independent; `threads` > 1 computes them concurrently with identical
/// results (each entry keeps a fixed internal summation order).
std::vector<double> rhs_vector(const CardinalBasis& basis, const TargetFunction& f,
                               const QuadConfig& cfg, unsigned threads = 1);

/// Solves the normal equations by Cholesky, falling back to partially
/// pivoted elimination when the SPD factorization fails numerically.
/// Throws SingularMatrixError (naming the smallest pivot) when the system
/// is singular to tolerance, and std::invalid_argument if `sys.gram` is
/// not symmetric.
std::vector<double> solve_normal_equations(const CollageSystem& sys);

/// Collage objective phi(alpha) = sum_l a_l * integral over [a,b] of
/// [ s_l f(x) + sum_k alpha_k lambda_l^(k)(x) - f(u_l(x)) ]^2.
double objective(std::span<const double> alpha, const CardinalBasis& basis,
                 const TargetFunction& f, const QuadConfig& cfg);

/// Full pipeline: cardinal basis, normal equations, solve, then error
/// certificates. The fitted function is returned only through its
/// coefficients; evaluation goes through the fixed-point machinery.
FitResult fit(const TargetFunction& f, const Partition& p, const ScaleVector& s,
              const QuadConfig& quad = {}, const EvalConfig& eval = {},
              unsigned threads = 1);

}  // namespace fif
