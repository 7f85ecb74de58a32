#pragma once

#include <span>
#include <vector>

#include "fif/affine_polynomial.hpp"
#include "fif/partition.hpp"

namespace fif {

/// Lambda vector whose fixed point interpolates the data (x_j, y_j) and is
/// continuous: lambda_l(a) = y_l - s_l * y_0, lambda_l(b) = y_{l+1} - s_l * y_N.
/// Throws std::invalid_argument on length mismatch.
LambdaVector lambda_for_data(const Partition& p, const ScaleVector& s,
                             std::span<const double> y);

/// The cardinal interpolation basis: N+1 lambda vectors whose fixed points
/// phi_0 ... phi_N satisfy phi_k(x_j) = delta_kj. The phi_k span the
/// (N+1)-dimensional space of continuous fractal functions with affine
/// lambda coefficients over this partition and scale vector.
class CardinalBasis {
 public:
  CardinalBasis(Partition p, ScaleVector s);

  const Partition& partition() const { return partition_; }
  const AffineMapSet& maps() const { return maps_; }
  const ScaleVector& scales() const { return scales_; }

  /// N+1 lambda vectors, one per basis function.
  const std::vector<LambdaVector>& lambda_vectors() const { return lambdas_; }
  const LambdaVector& operator[](std::size_t k) const { return lambdas_[k]; }
  std::size_t size() const { return lambdas_.size(); }

 private:
  Partition partition_;
  AffineMapSet maps_;
  ScaleVector scales_;
  std::vector<LambdaVector> lambdas_;
};

CardinalBasis cardinal_basis(const Partition& p, const ScaleVector& s);

/// Componentwise combination sum_k alpha_k * lambda^(k). Because the map
/// lambda -> fixed point is linear, the fixed point of the result equals
/// sum_k alpha_k * phi_k.
LambdaVector combine(const CardinalBasis& basis, std::span<const double> alpha);

}  // namespace fif
