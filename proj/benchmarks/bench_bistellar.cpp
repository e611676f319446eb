#include <benchmark/benchmark.h>

#include "simplicia/bistellar.hpp"
#include "simplicia/generators.hpp"
#include "simplicia/isomorphism.hpp"
#include "simplicia/reduction.hpp"

using namespace simplicia;

static void BM_ValidMoves(benchmark::State& state) {
  auto c = cyclic_polytope_boundary(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(valid_moves(c));
}
BENCHMARK(BM_ValidMoves)->Arg(10)->Arg(20);

static void BM_ApplyAndReverse(benchmark::State& state) {
  auto c = cyclic_polytope_boundary(4, 12);
  auto moves = valid_moves(c, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& m = moves[i++ % moves.size()];
    auto after = apply_move(c, m);
    benchmark::DoNotOptimize(apply_move(after, reverse_move(c, m)));
  }
}
BENCHMARK(BM_ApplyAndReverse);

static void BM_Randomize(benchmark::State& state) {
  auto c = boundary_simplex(4);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(randomize(c, static_cast<int>(state.range(0)), seed++));
}
BENCHMARK(BM_Randomize)->Arg(50)->Arg(200);

static void BM_ReduceRandomizedSphere(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    state.PauseTiming();
    auto c = randomize(boundary_simplex(4), 50, seed).complex;
    state.ResumeTiming();
    ReductionOptions o;
    o.seed = seed++;
    benchmark::DoNotOptimize(reduce(c, o));
  }
}
BENCHMARK(BM_ReduceRandomizedSphere)->Unit(benchmark::kMillisecond);

static void BM_IsomorphismCyclic(benchmark::State& state) {
  auto a = cyclic_polytope_boundary(4, 20);
  std::vector<Vertex> perm;
  for (int v = a.vertex_count(); v >= 1; --v) perm.push_back(v);
  auto b = relabel(a, perm);
  for (auto _ : state) benchmark::DoNotOptimize(is_isomorphic(a, b));
}
BENCHMARK(BM_IsomorphismCyclic);
