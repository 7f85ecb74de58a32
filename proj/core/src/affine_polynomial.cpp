#include "fif/affine_polynomial.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fif {

bool AffinePolynomial::is_finite() const {
  return std::isfinite(c0) && std::isfinite(c1);
}

double AffinePolynomial::sup_norm(double a, double b) const {
  return std::max(std::abs((*this)(a)), std::abs((*this)(b)));
}

AffinePolynomial affine_through(double a, double va, double b, double vb) {
  AffinePolynomial p;
  p.c1 = (vb - va) / (b - a);
  p.c0 = va - p.c1 * a;
  return p;
}

LambdaVector::LambdaVector(std::vector<AffinePolynomial> per_segment)
    : polys_(std::move(per_segment)) {
  if (polys_.empty()) {
    throw std::invalid_argument("lambda vector must not be empty");
  }
  for (std::size_t l = 0; l < polys_.size(); ++l) {
    if (!polys_[l].is_finite()) {
      throw std::invalid_argument("lambda[" + std::to_string(l) +
                                  "] has non-finite coefficients");
    }
  }
}

}  // namespace fif
