#include <benchmark/benchmark.h>

#include <random>

#include "hypcube/bound_engine.hpp"
#include "hypcube/dual_cube.hpp"
#include "hypcube/ribbon_graph.hpp"

using namespace hypcube;

namespace {

ShearVector random_shears(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  ShearVector s(dim);
  for (double& x : s) x = u(rng);
  return s;
}

struct Setup {
  CurveSystem sys;
  Spine spine;
  std::vector<Word> words;
  Representation rep;

  explicit Setup(int k) : sys(curve_system(tau_graph(k))), spine(sys.graph) {
    for (const auto& c : sys.curves) words.push_back(spine.word(c));
    rep = build_rep(spine, random_shears(spine.shear_dimension(), 1));
  }
};

void BM_F_printed(benchmark::State& state) {
  const auto c = AngleConfiguration::regular(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(F_printed(c));
}
BENCHMARK(BM_F_printed)->DenseRange(3, 8);

void BM_F_gradient(benchmark::State& state) {
  const auto c = AngleConfiguration::regular(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(F_gradient(c));
}
BENCHMARK(BM_F_gradient)->DenseRange(3, 8);

void BM_minimize_F(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(minimize_F(static_cast<int>(state.range(0)), 1, 1));
}
BENCHMARK(BM_minimize_F)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_build_rep(benchmark::State& state) {
  const Setup s(static_cast<int>(state.range(0)));
  const auto sh = random_shears(s.spine.shear_dimension(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(build_rep(s.spine, sh));
}
BENCHMARK(BM_build_rep)->DenseRange(1, 4);

void BM_enumerate_lifts(benchmark::State& state) {
  const Setup s(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lifts(s.rep, s.words, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_enumerate_lifts)->Args({1, 3})->Args({2, 3})->Args({1, 4})->Unit(benchmark::kMillisecond);

void BM_maximal_cubes(benchmark::State& state) {
  const Setup s(static_cast<int>(state.range(0)));
  const auto ls = enumerate_lifts(s.rep, s.words, 3);
  for (auto _ : state) benchmark::DoNotOptimize(maximal_cubes(ls));
}
BENCHMARK(BM_maximal_cubes)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_verify_point(benchmark::State& state) {
  const Setup s(1);
  const auto sh = random_shears(s.spine.shear_dimension(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_point(s.sys, sh, 3));
}
BENCHMARK(BM_verify_point)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
