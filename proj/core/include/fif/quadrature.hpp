#pragma once

#include <functional>
#include <span>

#include "fif/affine_polynomial.hpp"

namespace fif {

struct QuadConfig {
  /// Equal panels per integration interval.
  int panels = 16;
  /// Gauss-Legendre points per panel, 1 to 12.
  int points = 5;

  void validate() const;
};

/// Gauss-Legendre rule on [-1, 1]: ascending nodes and matching weights.
struct GaussRule {
  std::span<const double> nodes;
  std::span<const double> weights;
};

/// Tabulated rule for 1..12 points. Throws std::invalid_argument otherwise.
GaussRule gauss_rule(int points);

/// Exact integral of p(x) * q(x) over [a, b]. The quadratic integrand is
/// evaluated in centered form, w * p(m) q(m) + w^3 p' q' / 12 with m the
/// midpoint, which is exact to rounding and symmetric in (p, q).
double affine_pair_integral(const AffinePolynomial& p, const AffinePolynomial& q,
                            double a, double b);

/// Composite Gauss-Legendre estimate of the weighted integral of
/// f(x) * p(x) over [a, b]. Node placement and summation order (ascending
/// panel, ascending node) are fixed, so results are bit-reproducible.
double integrate_against(const std::function<double(double)>& f,
                         const AffinePolynomial& p, double a, double b,
                         const QuadConfig& cfg = {});

}  // namespace fif
