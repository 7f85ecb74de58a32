#include "fif/fixed_point.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace fif {

namespace {

void check_lengths(const LambdaVector& lambda, const ScaleVector& s,
                   const Partition& p) {
  if (lambda.size() != p.segments() || s.size() != p.segments()) {
    throw std::invalid_argument("lambda/scale length does not match partition segments");
  }
}

// Piecewise-linear interpolant of per-node values; exact at the nodes.
double node_interpolant(const Partition& p, const std::vector<double>& values,
                        double x) {
  const std::size_t l = segment_of(p, x);
  const double xl = p.node(l);
  const double xr = p.node(l + 1);
  const double t = (x - xl) / (xr - xl);
  return (1.0 - t) * values[l] + t * values[l + 1];
}

double clamp_to(double x, double lo, double hi) {
  return std::min(std::max(x, lo), hi);
}

}  // namespace

void EvalConfig::validate() const {
  if (depth < 1) throw std::invalid_argument("eval depth must be >= 1");
  if (dense_grid < 2) throw std::invalid_argument("dense_grid must be >= 2");
}

double apply_collage(const LambdaVector& lambda, const ScaleVector& s,
                     const Partition& p, const std::function<double(double)>& g,
                     double x) {
  check_lengths(lambda, s, p);
  const std::size_t l = segment_of(p, x);
  const double width = p.b() - p.a();
  const AffineMap u{(p.node(l + 1) - p.node(l)) / width,
                    (p.node(l) * p.b() - p.node(l + 1) * p.a()) / width};
  const double t = clamp_to(u.inverse(x), p.a(), p.b());
  return s[l] * g(t) + lambda[l](t);
}

std::vector<double> node_values(const LambdaVector& lambda, const ScaleVector& s,
                                const Partition& p) {
  check_lengths(lambda, s, p);
  const std::size_t n = p.segments();
  std::vector<double> values(n + 1);
  const double fa = lambda[0](p.a()) / (1.0 - s[0]);
  const double fb = lambda[n - 1](p.b()) / (1.0 - s[n - 1]);
  values[0] = fa;
  values[n] = fb;
  for (std::size_t l = 1; l < n; ++l) {
    values[l] = s[l] * fa + lambda[l](p.a());
  }
  return values;
}

std::vector<double> continuity_residuals(const LambdaVector& lambda,
                                         const ScaleVector& s, const Partition& p) {
  check_lengths(lambda, s, p);
  const std::size_t n = p.segments();
  const double fa = lambda[0](p.a()) / (1.0 - s[0]);
  const double fb = lambda[n - 1](p.b()) / (1.0 - s[n - 1]);
  std::vector<double> residuals(n - 1);
  for (std::size_t l = 0; l + 1 < n; ++l) {
    residuals[l] = (lambda[l](p.b()) - lambda[l + 1](p.a())) -
                   (s[l + 1] * fa - s[l] * fb);
  }
  return residuals;
}

std::vector<Sample> sample_fixed_point(const LambdaVector& lambda,
                                       const ScaleVector& s, const Partition& p,
                                       int depth, std::size_t max_points) {
  check_lengths(lambda, s, p);
  if (depth < 0) throw std::invalid_argument("sample depth must be >= 0");

  const std::size_t n = p.segments();

  // Level sizes satisfy m -> n*m - (n-1); reject before allocating.
  std::size_t final_size = n + 1;
  for (int d = 0; d < depth; ++d) {
    if (final_size > (max_points + n - 1) / n) {
      throw std::length_error("address grid at depth " + std::to_string(depth) +
                              " exceeds the point cap of " + std::to_string(max_points));
    }
    final_size = n * final_size - (n - 1);
  }
  if (final_size > max_points) {
    throw std::length_error("address grid at depth " + std::to_string(depth) +
                            " exceeds the point cap of " + std::to_string(max_points));
  }

  const AffineMapSet maps = affine_maps(p);
  std::vector<Sample> current(n + 1);
  const std::vector<double> seed = node_values(lambda, s, p);
  for (std::size_t j = 0; j <= n; ++j) {
    current[j] = Sample{p.node(j), seed[j]};
  }

  std::vector<Sample> next;
  for (int d = 0; d < depth; ++d) {
    next.clear();
    next.reserve(n * current.size() - (n - 1));
    for (std::size_t l = 0; l < n; ++l) {
      // The last image of segment l coincides with the first image of
      // segment l+1; dropping it keeps the right-branch value at junctions.
      const std::size_t end = (l + 1 < n) ? current.size() - 1 : current.size();
      for (std::size_t i = 0; i < end; ++i) {
        const double t = current[i].x;
        next.push_back(Sample{maps[l](t), s[l] * current[i].value + lambda[l](t)});
      }
    }
    current.swap(next);
  }
  return current;
}

FixedPointEvaluator::FixedPointEvaluator(LambdaVector lambda, ScaleVector s,
                                         Partition p)
    : lambda_(std::move(lambda)),
      scales_(std::move(s)),
      partition_(std::move(p)),
      maps_(affine_maps(partition_)),
      node_values_(fif::node_values(lambda_, scales_, partition_)),
      closure_bound_(0.0) {
  // Contraction estimate: || f - g0 || <= || Bg0 - g0 || / (1 - c)
  //                                    <= (max_l ||lambda_l|| + (1+c) ||g0||) / (1 - c).
  const double c = scales_.contraction();
  double lambda_sup = 0.0;
  for (const AffinePolynomial& poly : lambda_.polynomials()) {
    lambda_sup = std::max(lambda_sup, poly.sup_norm(partition_.a(), partition_.b()));
  }
  double interp_sup = 0.0;
  for (double v : node_values_) interp_sup = std::max(interp_sup, std::abs(v));
  closure_bound_ = (lambda_sup + (1.0 + c) * interp_sup) / (1.0 - c);
}

double FixedPointEvaluator::operator()(double x, int depth) const {
  if (depth < 1) throw std::invalid_argument("eval depth must be >= 1");

  // Descend through pre-images, then unwind the affine corrections.
  struct Level {
    std::size_t segment;
    double point;
  };
  std::vector<Level> chain;
  chain.reserve(static_cast<std::size_t>(depth));
  double t = x;
  for (int d = 0; d < depth; ++d) {
    const std::size_t l = segment_of(partition_, t);
    t = clamp_to(maps_[l].inverse(t), partition_.a(), partition_.b());
    chain.push_back(Level{l, t});
  }
  double value = node_interpolant(partition_, node_values_, t);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    value = scales_[it->segment] * value + lambda_[it->segment](it->point);
  }
  return value;
}

EvalResult FixedPointEvaluator::evaluate(double x, const EvalConfig& cfg) const {
  cfg.validate();
  const double c = scales_.contraction();
  EvalResult result;
  result.value = (*this)(x, cfg.depth);
  result.error_bound = std::pow(c, cfg.depth) * closure_bound_;
  return result;
}

EvalResult evaluate(const LambdaVector& lambda, const ScaleVector& s,
                    const Partition& p, double x, const EvalConfig& cfg) {
  check_lengths(lambda, s, p);
  return FixedPointEvaluator(lambda, s, p).evaluate(x, cfg);
}

double max_abs_on_grid(const std::function<double(double)>& g, const Partition& p,
                       int per_segment) {
  if (per_segment < 2) throw std::invalid_argument("grid needs >= 2 points per segment");
  double sup = 0.0;
  for (std::size_t l = 0; l < p.segments(); ++l) {
    const double xl = p.node(l);
    const double xr = p.node(l + 1);
    for (int i = 0; i < per_segment; ++i) {
      const double x = xl + (xr - xl) * static_cast<double>(i) /
                                static_cast<double>(per_segment - 1);
      sup = std::max(sup, std::abs(g(x)));
    }
  }
  return sup;
}

double max_abs_on_grid(const std::function<double(double)>& g, const Partition& p,
                       const EvalConfig& cfg) {
  cfg.validate();
  return max_abs_on_grid(g, p, cfg.dense_grid);
}

}  // namespace fif
