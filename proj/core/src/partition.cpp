#include "fif/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fif {

Partition::Partition(double a, double b, std::vector<double> nodes)
    : a_(a), b_(b), nodes_(std::move(nodes)) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("partition endpoints must be finite");
  }
  if (!(a < b)) {
    throw std::invalid_argument("partition requires a < b, got a=" +
                                std::to_string(a) + ", b=" + std::to_string(b));
  }
  if (nodes_.size() < 3) {
    throw std::invalid_argument("partition needs at least 2 segments (3 nodes), got " +
                                std::to_string(nodes_.size()) + " nodes");
  }
  if (nodes_.front() != a || nodes_.back() != b) {
    throw std::invalid_argument("partition node list must start at a and end at b");
  }
  for (std::size_t j = 0; j + 1 < nodes_.size(); ++j) {
    if (!std::isfinite(nodes_[j + 1]) || !(nodes_[j] < nodes_[j + 1])) {
      throw std::invalid_argument("partition nodes must be strictly increasing (violated at index " +
                                  std::to_string(j + 1) + ")");
    }
  }
}

Partition build_partition(double a, double b, std::size_t segments) {
  if (segments < 2) {
    throw std::invalid_argument("uniform partition needs at least 2 segments, got " +
                                std::to_string(segments));
  }
  if (!(a < b)) {
    throw std::invalid_argument("partition requires a < b");
  }
  std::vector<double> nodes(segments + 1);
  for (std::size_t j = 0; j <= segments; ++j) {
    nodes[j] = a + static_cast<double>(j) * (b - a) / static_cast<double>(segments);
  }
  nodes.front() = a;
  nodes.back() = b;
  return Partition(a, b, std::move(nodes));
}

Partition build_partition(double a, double b, std::vector<double> nodes) {
  return Partition(a, b, std::move(nodes));
}

AffineMapSet affine_maps(const Partition& p) {
  const double a = p.a();
  const double b = p.b();
  const double width = b - a;
  std::vector<AffineMap> maps(p.segments());
  for (std::size_t l = 0; l < maps.size(); ++l) {
    const double xl = p.node(l);
    const double xr = p.node(l + 1);
    maps[l].slope = (xr - xl) / width;
    maps[l].intercept = (xl * b - xr * a) / width;

    // Endpoint conditions u_l(a) = x_l, u_l(b) = x_{l+1} must hold to
    // rounding; anything larger indicates a broken partition.
    const double tol = 1e-12 * std::max({1.0, std::abs(xl), std::abs(xr)});
    if (std::abs(maps[l](a) - xl) > tol || std::abs(maps[l](b) - xr) > tol) {
      throw std::logic_error("affine map endpoint conditions violated on segment " +
                             std::to_string(l));
    }
  }
  return AffineMapSet(std::move(maps));
}

std::size_t segment_of(const Partition& p, double x) {
  if (!(x >= p.a()) || !(x <= p.b())) {
    throw std::domain_error("point x=" + std::to_string(x) + " outside [" +
                            std::to_string(p.a()) + ", " + std::to_string(p.b()) + "]");
  }
  const auto& nodes = p.nodes();
  auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
  auto l = static_cast<std::size_t>(it - nodes.begin()) - 1;
  // x = b falls past the last node; assign the last segment (left limit rule).
  return std::min(l, p.segments() - 1);
}

ScaleVector::ScaleVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("scale vector must not be empty");
  }
  for (std::size_t l = 0; l < values_.size(); ++l) {
    if (!std::isfinite(values_[l]) || !(std::abs(values_[l]) < 1.0)) {
      throw std::invalid_argument("vertical scaling factor s[" + std::to_string(l) +
                                  "]=" + std::to_string(values_[l]) +
                                  " must satisfy |s| < 1");
    }
  }
}

double ScaleVector::contraction() const {
  double c = 0.0;
  for (double s : values_) c = std::max(c, std::abs(s));
  return c;
}

}  // namespace fif
