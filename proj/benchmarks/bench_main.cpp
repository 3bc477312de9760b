#include <benchmark/benchmark.h>

#include "polyiso/avgcase.hpp"
#include "polyiso/gaussian.hpp"
#include "polyiso/hnf.hpp"
#include "polyiso/uip.hpp"
#include "polyiso/zkp.hpp"

using namespace polyiso;

namespace {

LatticePolytope cube(std::size_t n) {
  std::vector<IntVec> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    IntVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<long>(mask >> i & 1u);
    pts.push_back(v);
  }
  return certify_polytope(pts);
}

UnimodularMatrix shear(std::size_t n) {
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = 1;
  return UnimodularMatrix(m);
}

void BM_EdgeGraph(benchmark::State& state) {
  const auto p = cube(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(edge_graph(p));
}
BENCHMARK(BM_EdgeGraph)->DenseRange(2, 4);

void BM_AllTransforms(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto p = cube(n);
  const auto q = apply_map(p, {shear(n), IntVec(n, 3)});
  for (auto _ : state) benchmark::DoNotOptimize(all_transforms(p, q));
}
BENCHMARK(BM_AllTransforms)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_Hnf(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  IntMatrix y(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y(i, j) = static_cast<long>((7 * i + 3 * j * j + 1) % 11) - 5 + (i == j ? 20 : 0);
  for (auto _ : state) benchmark::DoNotOptimize(hnf_lower_canonical(y));
}
BENCHMARK(BM_Hnf)->DenseRange(2, 6, 2);

void BM_GaussianSample(benchmark::State& state) {
  GaussianParams params;
  params.Q = quadratic_form(cube(static_cast<std::size_t>(state.range(0))));
  params.s = 4;
  GaussianSampler sampler(params);
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.sample(rng));
}
BENCHMARK(BM_GaussianSample)->DenseRange(2, 4);

void BM_ClassSample(benchmark::State& state) {
  const auto p = cube(static_cast<std::size_t>(state.range(0)));
  ClassSampler sampler(p, Rat(4));
  Rng rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.sample(rng));
}
BENCHMARK(BM_ClassSample)->DenseRange(2, 3);

void BM_ProtocolRound(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto p0 = cube(n);
  const Witness w{shear(n)};
  const Statement st(p0, apply_map(p0, {w.U, IntVec(n)}));
  Prover prover(st, w, protocol_sigma_param(st));
  Rng rng(3);
  for (auto _ : state) {
    auto [com, ps] = prover.commit(rng);
    const int c = verifier_challenge(rng);
    benchmark::DoNotOptimize(verify(st, make_transcript(com, c, prover.respond(ps, c))));
  }
}
BENCHMARK(BM_ProtocolRound)->DenseRange(2, 3);

}  // namespace

BENCHMARK_MAIN();
