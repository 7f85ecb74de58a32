#include "fif/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fif {

void QuadConfig::validate() const {
  if (panels < 1) throw std::invalid_argument("quadrature needs at least one panel");
  if (points < 1 || points > 12) {
    throw std::invalid_argument("quadrature points must be in 1..12, got " +
                                std::to_string(points));
  }
}

double affine_pair_integral(const AffinePolynomial& p, const AffinePolynomial& q,
                            double a, double b) {
  if (!(a < b)) throw std::invalid_argument("affine_pair_integral requires a < b");
  const double w = b - a;
  const double m = 0.5 * (a + b);
  return w * (p(m) * q(m)) + (w * w * w) * (p.c1 * q.c1) / 12.0;
}

double integrate_against(const std::function<double(double)>& f,
                         const AffinePolynomial& p, double a, double b,
                         const QuadConfig& cfg) {
  if (!(a < b)) throw std::invalid_argument("integrate_against requires a < b");
  cfg.validate();

  const GaussRule rule = gauss_rule(cfg.points);
  const double h = (b - a) / static_cast<double>(cfg.panels);
  double total = 0.0;
  for (int panel = 0; panel < cfg.panels; ++panel) {
    const double left = a + h * static_cast<double>(panel);
    const double mid = left + 0.5 * h;
    const double half = 0.5 * h;
    double acc = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const double x = mid + half * rule.nodes[j];
      const double fx = f(x);
      if (!std::isfinite(fx)) {
        throw std::runtime_error("integrand returned a non-finite value at x=" +
                                 std::to_string(x));
      }
      acc += rule.weights[j] * fx * p(x);
    }
    total += half * acc;
  }
  return total;
}

}  // namespace fif
