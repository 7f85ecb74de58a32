#pragma once

#include <cstddef>
#include <vector>

namespace fif {

/// Degree-one polynomial p(x) = c0 + c1 * x.
struct AffinePolynomial {
  double c0 = 0.0;
  double c1 = 0.0;

  double operator()(double x) const { return c0 + c1 * x; }

  bool is_finite() const;

  /// Sup norm over [a, b]; an affine function attains it at an endpoint.
  double sup_norm(double a, double b) const;
};

/// The unique affine polynomial taking value `va` at `a` and `vb` at `b`.
AffinePolynomial affine_through(double a, double va, double b, double vb);

/// One point of the parameter space: an affine polynomial per segment.
/// Paired with a ScaleVector, it determines a collage operator and hence a
/// unique bounded fixed-point function.
class LambdaVector {
 public:
  explicit LambdaVector(std::vector<AffinePolynomial> per_segment);

  std::size_t size() const { return polys_.size(); }
  const AffinePolynomial& operator[](std::size_t l) const { return polys_[l]; }
  const std::vector<AffinePolynomial>& polynomials() const { return polys_; }

 private:
  std::vector<AffinePolynomial> polys_;
};

}  // namespace fif
