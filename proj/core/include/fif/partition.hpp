#pragma once

#include <cstddef>
#include <vector>

namespace fif {

/// Strictly increasing partition a = x_0 < x_1 < ... < x_N = b of a closed
/// interval, with N >= 2 segments. Immutable after construction.
class Partition {
 public:
  /// Validates and takes ownership of the node list. Throws
  /// std::invalid_argument on non-monotone nodes, fewer than two segments,
  /// or endpoints that do not match (a, b).
  Partition(double a, double b, std::vector<double> nodes);

  double a() const { return a_; }
  double b() const { return b_; }
  double width() const { return b_ - a_; }

  /// Number of segments N (one less than the number of nodes).
  std::size_t segments() const { return nodes_.size() - 1; }

  const std::vector<double>& nodes() const { return nodes_; }
  double node(std::size_t j) const { return nodes_[j]; }

 private:
  double a_;
  double b_;
  std::vector<double> nodes_;
};

/// Uniform partition with `segments` equal segments.
Partition build_partition(double a, double b, std::size_t segments);

/// Partition from an explicit node list (endpoints must equal a and b).
Partition build_partition(double a, double b, std::vector<double> nodes);

/// Increasing affine contraction u(x) = slope * x + intercept.
struct AffineMap {
  double slope = 1.0;
  double intercept = 0.0;

  double operator()(double x) const { return slope * x + intercept; }
  double inverse(double y) const { return (y - intercept) / slope; }
};

/// The per-segment maps u_l : [a,b] -> [x_l, x_{l+1}] determined by
/// u_l(x_0) = x_l and u_l(x_N) = x_{l+1}. Construction checks the endpoint
/// conditions; values are fixed afterwards.
class AffineMapSet {
 public:
  explicit AffineMapSet(std::vector<AffineMap> maps) : maps_(std::move(maps)) {}

  std::size_t size() const { return maps_.size(); }
  const AffineMap& operator[](std::size_t l) const { return maps_[l]; }
  const std::vector<AffineMap>& maps() const { return maps_; }

 private:
  std::vector<AffineMap> maps_;
};

/// Builds the segment maps for a partition:
///   slope_l     = (x_{l+1} - x_l) / (b - a)
///   intercept_l = (x_l * b - x_{l+1} * a) / (b - a)
AffineMapSet affine_maps(const Partition& p);

/// Segment index l with x_l <= x < x_{l+1}; x = b maps to segment N-1.
/// Throws std::domain_error for x outside [a, b].
std::size_t segment_of(const Partition& p, double x);

/// Vertical scaling factors s_0 ... s_{N-1}, each with |s_l| < 1.
class ScaleVector {
 public:
  explicit ScaleVector(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t l) const { return values_[l]; }
  const std::vector<double>& values() const { return values_; }

  /// Contraction factor c = max_l |s_l|, strictly below 1.
  double contraction() const;

 private:
  std::vector<double> values_;
};

}  // namespace fif
