#include "fif/basis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "fif/fixed_point.hpp"

namespace fif {

LambdaVector lambda_for_data(const Partition& p, const ScaleVector& s,
                             std::span<const double> y) {
  const std::size_t n = p.segments();
  if (s.size() != n) {
    throw std::invalid_argument("scale vector length " + std::to_string(s.size()) +
                                " does not match segment count " + std::to_string(n));
  }
  if (y.size() != n + 1) {
    throw std::invalid_argument("data length " + std::to_string(y.size()) +
                                " does not match node count " + std::to_string(n + 1));
  }
  for (double v : y) {
    if (!std::isfinite(v)) throw std::invalid_argument("data values must be finite");
  }

  std::vector<AffinePolynomial> polys(n);
  for (std::size_t l = 0; l < n; ++l) {
    const double va = y[l] - s[l] * y[0];
    const double vb = y[l + 1] - s[l] * y[n];
    polys[l] = affine_through(p.a(), va, p.b(), vb);
  }
  return LambdaVector(std::move(polys));
}

CardinalBasis::CardinalBasis(Partition p, ScaleVector s)
    : partition_(std::move(p)), maps_(affine_maps(partition_)), scales_(std::move(s)) {
  const std::size_t n = partition_.segments();
  if (scales_.size() != n) {
    throw std::invalid_argument("scale vector length " + std::to_string(scales_.size()) +
                                " does not match segment count " + std::to_string(n));
  }

  lambdas_.reserve(n + 1);
  std::vector<double> unit(n + 1, 0.0);
  for (std::size_t k = 0; k <= n; ++k) {
    unit[k] = 1.0;
    lambdas_.push_back(lambda_for_data(partition_, scales_, unit));
    unit[k] = 0.0;
  }

  // Every basis element must describe a continuous fixed point.
  for (const LambdaVector& lv : lambdas_) {
    for (double r : continuity_residuals(lv, scales_, partition_)) {
      if (std::abs(r) > 1e-12) {
        throw std::logic_error("cardinal basis continuity check failed");
      }
    }
  }
}

CardinalBasis cardinal_basis(const Partition& p, const ScaleVector& s) {
  return CardinalBasis(p, s);
}

LambdaVector combine(const CardinalBasis& basis, std::span<const double> alpha) {
  if (alpha.size() != basis.size()) {
    throw std::invalid_argument("coefficient length " + std::to_string(alpha.size()) +
                                " does not match basis size " +
                                std::to_string(basis.size()));
  }
  const std::size_t n = basis.partition().segments();
  std::vector<AffinePolynomial> polys(n);
  for (std::size_t l = 0; l < n; ++l) {
    double c0 = 0.0;
    double c1 = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
      const AffinePolynomial& q = basis[k][l];
      c0 += alpha[k] * q.c0;
      c1 += alpha[k] * q.c1;
    }
    polys[l] = AffinePolynomial{c0, c1};
  }
  return LambdaVector(std::move(polys));
}

}  // namespace fif
