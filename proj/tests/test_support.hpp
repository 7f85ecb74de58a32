#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "fif/fif.hpp"

namespace testsup {

// Deterministic uniform draw; avoids distribution objects so sequences are
// identical across standard libraries.
inline double urand(std::mt19937& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng()) / 4294967296.0);
}

inline fif::ScaleVector random_scales(std::mt19937& rng, std::size_t n, double cap) {
  std::vector<double> s(n);
  for (double& v : s) v = urand(rng, -cap, cap);
  return fif::ScaleVector(std::move(s));
}

inline fif::Partition random_partition(std::mt19937& rng, std::size_t n,
                                       double a = 0.0, double b = 1.0) {
  std::vector<double> gaps(n);
  double total = 0.0;
  for (double& g : gaps) {
    g = 0.2 + urand(rng, 0.0, 1.0);
    total += g;
  }
  std::vector<double> nodes(n + 1);
  nodes[0] = a;
  double acc = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    acc += gaps[j - 1];
    nodes[j] = a + (b - a) * acc / total;
  }
  nodes[n] = b;
  return fif::Partition(a, b, std::move(nodes));
}

// Piecewise-linear interpolant through (xs[j], ys[j]); the classical hat
// combination, written without any of the library machinery.
inline double pl_interp(const std::vector<double>& xs, const std::vector<double>& ys,
                        double x) {
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  std::size_t i = static_cast<std::size_t>(it - xs.begin());
  i = std::clamp<std::size_t>(i, 1, xs.size() - 1);
  const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
  return (1.0 - t) * ys[i - 1] + t * ys[i];
}

// Exact-sample lookup: resolves a query to the nearest sampled abscissa.
class SampleLookup {
 public:
  explicit SampleLookup(std::vector<fif::Sample> samples)
      : samples_(std::move(samples)) {}

  double operator()(double x) const {
    auto it = std::lower_bound(samples_.begin(), samples_.end(), x,
                               [](const fif::Sample& s, double v) { return s.x < v; });
    std::size_t i = static_cast<std::size_t>(it - samples_.begin());
    if (i == samples_.size()) --i;
    if (i > 0 && std::abs(samples_[i - 1].x - x) < std::abs(samples_[i].x - x)) --i;
    if (std::abs(samples_[i].x - x) > 1e-9) {
      throw std::logic_error("query point is not on the sampled grid");
    }
    return samples_[i].value;
  }

 private:
  std::vector<fif::Sample> samples_;
};

// Trapezoid L2 distance between a function and sampled values, over the
// sample abscissae.
inline double trapezoid_l2_error(const std::function<double(double)>& f,
                                 const std::vector<fif::Sample>& samples) {
  double acc = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double d = f(samples[i].x) - samples[i].value;
    const double sq = d * d;
    if (i > 0) acc += 0.5 * (samples[i].x - samples[i - 1].x) * (prev + sq);
    prev = sq;
  }
  return std::sqrt(std::max(acc, 0.0));
}

}  // namespace testsup
