#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "fif/affine_polynomial.hpp"
#include "fif/partition.hpp"

namespace fif {

struct EvalConfig {
  /// Recursion depth for truncated evaluation and address-grid sampling.
  int depth = 6;
  /// Samples per segment used by grid-based sup-norm estimates.
  int dense_grid = 64;

  void validate() const;
};

/// Truncated evaluation result: the value plus a rigorous bound on the
/// distance to the true fixed-point value at that point.
struct EvalResult {
  double value = 0.0;
  double error_bound = 0.0;
};

/// One exactly-computed point of a fixed-point graph.
struct Sample {
  double x = 0.0;
  double value = 0.0;
};

inline constexpr std::size_t kDefaultSamplePointCap = 8'000'000;

/// One application of the collage operator: s_l * g(u_l^{-1}(x)) +
/// lambda_l(u_l^{-1}(x)) with l = segment_of(x). The operator is a sup-norm
/// contraction with factor max|s_l|; its fixed point is the fractal function.
double apply_collage(const LambdaVector& lambda, const ScaleVector& s,
                     const Partition& p, const std::function<double(double)>& g,
                     double x);

/// Fixed-point values at the partition nodes, in closed form:
///   f(a)   = lambda_0(a) / (1 - s_0)
///   f(b)   = lambda_{N-1}(b) / (1 - s_{N-1})
///   f(x_l) = s_l * f(a) + lambda_l(a)   for interior l.
std::vector<double> node_values(const LambdaVector& lambda, const ScaleVector& s,
                                const Partition& p);

/// Continuity defects at the interior junctions x_1 ... x_{N-1}. Entry l is
///   [lambda_l(b) - lambda_{l+1}(a)] - [s_{l+1} f(a) - s_l f(b)],
/// the jump (left limit minus right value) of the fixed point at x_{l+1}.
/// All entries vanish exactly when the fixed point is continuous.
std::vector<double> continuity_residuals(const LambdaVector& lambda,
                                         const ScaleVector& s, const Partition& p);

/// Exact samples of the fixed point on the depth-d address grid: every point
/// u_{l_1} o ... o u_{l_d}(x_j), computed by forward recursion from the node
/// values (no truncation error). Sorted by x; junction duplicates keep the
/// right-branch value. Size grows as N^(d+1)+1; exceeding `max_points`
/// throws std::length_error.
std::vector<Sample> sample_fixed_point(const LambdaVector& lambda,
                                       const ScaleVector& s, const Partition& p,
                                       int depth,
                                       std::size_t max_points = kDefaultSamplePointCap);

/// Truncated evaluation at an arbitrary point: unrolls the self-referential
/// equation `depth` times, then closes with the piecewise-linear interpolant
/// of the node values. The reported bound is c^depth * M with c = max|s_l|
/// and M a sup-bound on the distance between the fixed point and the node
/// interpolant, so the true value lies within [value - bound, value + bound].
EvalResult evaluate(const LambdaVector& lambda, const ScaleVector& s,
                    const Partition& p, double x, const EvalConfig& cfg);

/// Caches maps and node values for repeated point evaluation.
class FixedPointEvaluator {
 public:
  FixedPointEvaluator(LambdaVector lambda, ScaleVector s, Partition p);

  /// Truncated recursion value at x (depth >= 1).
  double operator()(double x, int depth) const;

  EvalResult evaluate(double x, const EvalConfig& cfg) const;

  const std::vector<double>& node_values() const { return node_values_; }

  /// Sup-bound M on |fixed point - node interpolant| over [a, b].
  double closure_bound() const { return closure_bound_; }

 private:
  LambdaVector lambda_;
  ScaleVector scales_;
  Partition partition_;
  AffineMapSet maps_;
  std::vector<double> node_values_;
  double closure_bound_;
};

/// max |g| over a per-segment sampling grid (`per_segment` points per
/// segment, endpoints included).
double max_abs_on_grid(const std::function<double(double)>& g, const Partition& p,
                       int per_segment);

/// Same, sampling cfg.dense_grid points per segment.
double max_abs_on_grid(const std::function<double(double)>& g, const Partition& p,
                       const EvalConfig& cfg);

}  // namespace fif
