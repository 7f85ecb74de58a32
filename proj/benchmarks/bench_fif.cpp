#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "fif/fif.hpp"

namespace {

fif::ScaleVector alternating_scales(std::size_t n) {
  std::vector<double> s(n);
  for (std::size_t l = 0; l < n; ++l) s[l] = (l % 2 == 0) ? 0.35 : -0.25;
  return fif::ScaleVector(std::move(s));
}

const fif::TargetFunction kSine{[](double x) { return std::sin(x); }, "sin"};

void CardinalBasisConstruction(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const fif::Partition p = fif::build_partition(0.0, 1.0, n);
  const fif::ScaleVector s = alternating_scales(n);
  for (auto _ : state) {
    fif::CardinalBasis basis(p, s);
    benchmark::DoNotOptimize(basis);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(CardinalBasisConstruction)->RangeMultiplier(2)->Range(4, 256)->Complexity();

void GramAssembly(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const fif::CardinalBasis basis(fif::build_partition(0.0, 1.0, n),
                                 alternating_scales(n));
  for (auto _ : state) {
    fif::Matrix a = fif::gram_matrix(basis);
    benchmark::DoNotOptimize(a);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(GramAssembly)->RangeMultiplier(2)->Range(4, 128)->Complexity();

void RhsAssembly(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const fif::CardinalBasis basis(fif::build_partition(0.0, 1.0, n),
                                 alternating_scales(n));
  for (auto _ : state) {
    auto beta = fif::rhs_vector(basis, kSine, {});
    benchmark::DoNotOptimize(beta);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(RhsAssembly)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void NormalEquationSolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const fif::CardinalBasis basis(fif::build_partition(0.0, 1.0, n),
                                 alternating_scales(n));
  const fif::CollageSystem sys{fif::gram_matrix(basis),
                               fif::rhs_vector(basis, kSine, {})};
  for (auto _ : state) {
    auto alpha = fif::solve_normal_equations(sys);
    benchmark::DoNotOptimize(alpha);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(NormalEquationSolve)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void FullFit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const fif::Partition p = fif::build_partition(0.0, 1.0, n);
  const fif::ScaleVector s = alternating_scales(n);
  const fif::EvalConfig eval{4, 64};
  for (auto _ : state) {
    fif::FitResult result = fif::fit(kSine, p, s, {}, eval);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(FullFit)->Arg(4)->Arg(8)->Arg(16);

void AddressSampling(benchmark::State& state) {
  const std::size_t n = 4;
  const fif::Partition p = fif::build_partition(0.0, 1.0, n);
  const fif::ScaleVector s = alternating_scales(n);
  const fif::CardinalBasis basis(p, s);
  const fif::LambdaVector combined = fif::combine(basis, p.nodes());
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto samples = fif::sample_fixed_point(combined, s, p, depth);
    benchmark::DoNotOptimize(samples);
  }
}
BENCHMARK(AddressSampling)->DenseRange(2, 8, 2);

void TruncatedEvaluation(benchmark::State& state) {
  const std::size_t n = 8;
  const fif::Partition p = fif::build_partition(0.0, 1.0, n);
  const fif::ScaleVector s = alternating_scales(n);
  const fif::CardinalBasis basis(p, s);
  const fif::FixedPointEvaluator eval(fif::combine(basis, p.nodes()), s, p);
  const int depth = static_cast<int>(state.range(0));
  double x = 0.123;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval(x, depth));
    x = (x < 0.9) ? x + 1e-4 : 0.123;
  }
}
BENCHMARK(TruncatedEvaluation)->DenseRange(4, 24, 10);

}  // namespace

BENCHMARK_MAIN();
