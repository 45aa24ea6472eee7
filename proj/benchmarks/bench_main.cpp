#include <benchmark/benchmark.h>

#include <random>

#include "graphfb/filter_design.hpp"
#include "graphfb/mallat.hpp"
#include "graphfb/polyapprox.hpp"

using namespace graphfb;

namespace {

Vector random_signal(Index n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Vector x(n);
  for (Index i = 0; i < n; ++i) x(i) = dist(rng);
  return x;
}

void BM_EigSym(benchmark::State& state) {
  const Matrix l = laplacian(gen_sensor(state.range(0), 1, 0.2));
  for (auto _ : state) benchmark::DoNotOptimize(eig_sym(l));
}
BENCHMARK(BM_EigSym)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_DesignLocal(benchmark::State& state) {
  const SpectralDecomposition sd = eig_sym(laplacian(gen_ring(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(design_local(sd.eigenvalues));
}
BENCHMARK(BM_DesignLocal)->Arg(256)->Arg(1000);

void BM_Analyze(benchmark::State& state) {
  const LevelTransform lt = make_level(gen_sensor(state.range(0), 1, 0.2), Design::Local);
  const Vector x = random_signal(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(lt, x));
}
BENCHMARK(BM_Analyze)->Arg(64)->Arg(256)->Arg(512);

void BM_MultilevelRoundTrip(benchmark::State& state) {
  const Pyramid p = build_pyramid(gen_ring(256), static_cast<int>(state.range(0)), Design::Local);
  const Vector x = random_signal(256, 3);
  for (auto _ : state) benchmark::DoNotOptimize(multilevel_synthesize(p, multilevel_analyze(p, x)));
}
BENCHMARK(BM_MultilevelRoundTrip)->Arg(1)->Arg(4);

void BM_RemezFit(benchmark::State& state) {
  const SpectralDecomposition sd = eig_sym(laplacian(gen_ring(256)));
  const FilterBank bank = design_local(sd.eigenvalues);
  for (auto _ : state) benchmark::DoNotOptimize(remez_fit(sd.eigenvalues, bank.h0, state.range(0)));
}
BENCHMARK(BM_RemezFit)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_PolyApply(benchmark::State& state) {
  const Graph g = gen_ring(4096);
  const SparseMatrix l = sparse_laplacian(g);
  const Vector lambda = Vector::LinSpaced(512, 0.0, 4.0);
  const Vector h = (2.0 - lambda.array()).sqrt().matrix();
  const FilterPolynomial p = remez_fit(lambda, h, state.range(0));
  const Vector x = random_signal(g.n(), 4);
  for (auto _ : state) benchmark::DoNotOptimize(poly_apply(p, l, x));
}
BENCHMARK(BM_PolyApply)->Arg(5)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
