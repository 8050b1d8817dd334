#include <benchmark/benchmark.h>

#include <cmath>

#include "arithdyn/catalog.hpp"
#include "arithdyn/cone.hpp"
#include "arithdyn/degree_dynamics.hpp"
#include "arithdyn/enumerate.hpp"
#include "arithdyn/orbit.hpp"

using namespace arithdyn;

static void BM_HenonDegreeSequence(benchmark::State& state) {
  const auto f = catalog("henon");
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(degree_sequence(f, n));
}
BENCHMARK(BM_HenonDegreeSequence)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_NagataDegreeSequence(benchmark::State& state) {
  const auto f = catalog("nagata_twisted");
  for (auto _ : state) benchmark::DoNotOptimize(degree_sequence(f, 3));
}
BENCHMARK(BM_NagataDegreeSequence)->Unit(benchmark::kMillisecond);

static void BM_HenonOrbitCount(benchmark::State& state) {
  const auto f = catalog("henon");
  const RationalPoint p{1, 1};
  const double bound = std::ldexp(1.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_orbit(f, p, bound));
}
BENCHMARK(BM_HenonOrbitCount)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

static void BM_ElementaryExhaustiveCount(benchmark::State& state) {
  const auto f = catalog("elementary");
  const RationalPoint p{1, 0};
  CountPolicy policy;
  policy.window.reset();
  policy.horizon = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(count_orbit(f, p, 10, policy));
}
BENCHMARK(BM_ElementaryExhaustiveCount)->Arg(1000)->Arg(12000)->Unit(benchmark::kMillisecond);

static void BM_EnumerateBoundedHeight(benchmark::State& state) {
  const double bound = std::log(static_cast<double>(state.range(0)));
  for (auto _ : state) {
    std::size_t n = 0;
    for_each_bounded_height(2, bound, [&](const RationalPoint&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumerateBoundedHeight)->Arg(8)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_EffIndexSimplex(benchmark::State& state) {
  // rank 4 with six generators and a dense right-hand side
  ResolutionData data;
  data.rank = 4;
  data.effective_generators = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, -1, 1, 0}, {0, 1, -1, 1}};
  data.nef_functionals = {{1, 0, 0, 0}};
  data.pi_H = {2, 1, 1, 1};
  data.psi_H = {Rational(7, 2), 3, Rational(5, 3), 2};
  data.psi_prime_H = {1, Rational(1, 2), 1, Rational(3, 4)};
  validate(data);
  for (auto _ : state) benchmark::DoNotOptimize(alpha_max_eff(data));
}
BENCHMARK(BM_EffIndexSimplex)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
