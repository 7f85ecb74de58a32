#include "fif/collage_fit.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

namespace fif {

namespace {

double max_abs_entry(const Matrix& a) {
  double m = 0.0;
  for (double v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

double max_diagonal(const Matrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) m = std::max(m, std::abs(a(i, i)));
  return m;
}

// One rhs entry; summation order is ascending l, so the result does not
// depend on how entries are scheduled across threads.
double rhs_entry(const CardinalBasis& basis, const TargetFunction& f,
                 const QuadConfig& cfg, std::size_t k) {
  const Partition& p = basis.partition();
  const ScaleVector& s = basis.scales();
  const AffineMapSet& maps = basis.maps();
  double beta = 0.0;
  for (std::size_t l = 0; l < p.segments(); ++l) {
    const AffinePolynomial& weight = basis[k][l];
    const AffineMap& u = maps[l];
    try {
      const double pulled =
          integrate_against([&](double t) { return f(u(t)); }, weight, p.a(), p.b(), cfg);
      const double direct = integrate_against(f.fn, weight, p.a(), p.b(), cfg);
      beta += u.slope * (pulled - s[l] * direct);
    } catch (const std::exception& e) {
      throw std::runtime_error("target '" + f.label + "' failed on segment " +
                               std::to_string(l) + ": " + e.what());
    }
  }
  return beta;
}

// Trapezoid rule over the (sorted, possibly non-uniform) sample abscissae.
double l2_error_on_samples(const TargetFunction& f, const std::vector<Sample>& samples) {
  double acc = 0.0;
  double prev_sq = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double d = f(samples[i].x) - samples[i].value;
    const double sq = d * d;
    if (i > 0) acc += 0.5 * (samples[i].x - samples[i - 1].x) * (prev_sq + sq);
    prev_sq = sq;
  }
  return std::sqrt(std::max(acc, 0.0));
}

}  // namespace

Matrix gram_matrix(const CardinalBasis& basis) {
  const Partition& p = basis.partition();
  const AffineMapSet& maps = basis.maps();
  const std::size_t dim = basis.size();
  Matrix gram(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t j = k; j < dim; ++j) {
      double entry = 0.0;
      for (std::size_t l = 0; l < p.segments(); ++l) {
        entry += maps[l].slope *
                 affine_pair_integral(basis[k][l], basis[j][l], p.a(), p.b());
      }
      gram(k, j) = entry;
      gram(j, k) = entry;
    }
  }
  return gram;
}

std::vector<double> rhs_vector(const CardinalBasis& basis, const TargetFunction& f,
                               const QuadConfig& cfg, unsigned threads) {
  cfg.validate();
  const std::size_t dim = basis.size();
  std::vector<double> beta(dim);
  const unsigned workers =
      std::max(1u, std::min(threads, static_cast<unsigned>(dim)));
  if (workers == 1) {
    for (std::size_t k = 0; k < dim; ++k) beta[k] = rhs_entry(basis, f, cfg, k);
    return beta;
  }

  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t k = w; k < dim; k += workers) {
          beta[k] = rhs_entry(basis, f, cfg, k);
        }
      } catch (...) {
        const std::scoped_lock lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return beta;
}

std::vector<double> solve_normal_equations(const CollageSystem& sys) {
  const Matrix& a = sys.gram;
  if (a.rows() != a.cols() || a.rows() != sys.rhs.size()) {
    throw std::invalid_argument("normal equation dimensions are inconsistent");
  }
  const double scale = max_abs_entry(a);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      if (std::abs(a(i, j) - a(j, i)) > 1e-13 * scale) {
        throw std::invalid_argument("normal equation matrix is not symmetric");
      }
    }
  }

  // Rank deficiency threshold: pivots below 1e-12 of the largest diagonal
  // entry are treated as zero at these problem sizes.
  const double pivot_floor = 1e-12 * max_diagonal(a);

  Matrix factor = a;
  double min_pivot = 0.0;
  if (cholesky_factor(factor, pivot_floor, min_pivot)) {
    return cholesky_solve(factor, sys.rhs);
  }
  return lu_solve(a, sys.rhs, pivot_floor);
}

double objective(std::span<const double> alpha, const CardinalBasis& basis,
                 const TargetFunction& f, const QuadConfig& cfg) {
  cfg.validate();
  const Partition& p = basis.partition();
  const ScaleVector& s = basis.scales();
  const AffineMapSet& maps = basis.maps();
  const LambdaVector combined = combine(basis, alpha);

  const GaussRule rule = gauss_rule(cfg.points);
  const double h = (p.b() - p.a()) / static_cast<double>(cfg.panels);
  double phi = 0.0;
  for (std::size_t l = 0; l < p.segments(); ++l) {
    const AffineMap& u = maps[l];
    double integral = 0.0;
    for (int panel = 0; panel < cfg.panels; ++panel) {
      const double left = p.a() + h * static_cast<double>(panel);
      const double mid = left + 0.5 * h;
      const double half = 0.5 * h;
      double acc = 0.0;
      for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        const double x = mid + half * rule.nodes[j];
        const double r = s[l] * f(x) + combined[l](x) - f(u(x));
        acc += rule.weights[j] * r * r;
      }
      integral += half * acc;
    }
    phi += u.slope * integral;
  }
  return phi;
}

FitResult fit(const TargetFunction& f, const Partition& p, const ScaleVector& s,
              const QuadConfig& quad, const EvalConfig& eval, unsigned threads) {
  quad.validate();
  eval.validate();

  const CardinalBasis basis(p, s);
  CollageSystem sys{gram_matrix(basis), rhs_vector(basis, f, quad, threads)};

  FitResult result;
  result.alpha = solve_normal_equations(sys);
  result.objective = objective(result.alpha, basis, f, quad);
  result.collage_residual = std::sqrt(std::max(result.objective, 0.0));
  result.contraction = s.contraction();
  result.collage_bound = result.collage_residual / (1.0 - result.contraction);

  const LambdaVector combined = combine(basis, result.alpha);
  const std::vector<Sample> samples = sample_fixed_point(combined, s, p, eval.depth);
  result.measured_l2_error = l2_error_on_samples(f, samples);

  result.max_node_jump = 0.0;
  for (double r : continuity_residuals(combined, s, p)) {
    result.max_node_jump = std::max(result.max_node_jump, std::abs(r));
  }

  result.certificate_ok =
      result.measured_l2_error <= result.collage_bound + kCertificateSlack;
  return result;
}

}  // namespace fif
