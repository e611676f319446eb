#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>

#include "simplicia/generators.hpp"
#include "simplicia/homology.hpp"
#include "simplicia/snf.hpp"
#include "simplicia/store.hpp"

using namespace simplicia;

static void BM_SnfRandomDense(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 gen(1);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n));
  for (auto& row : d)
    for (auto& x : row) x = entry(gen);
  auto m = IntegerMatrix::from_dense(d);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SnfRandomDense)->Arg(6)->Arg(20)->Arg(40);

static void BM_HomologyCyclic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto c = cyclic_polytope_boundary(4, n);  // fresh complex: no cache
    benchmark::DoNotOptimize(homology(c));
  }
}
BENCHMARK(BM_HomologyCyclic)->Arg(10)->Arg(20)->Arg(40);

static void BM_HomologyKummer(benchmark::State& state) {
  const auto path = std::filesystem::path(SIMPLICIA_FIXTURE_DIR) / "kummer_16.json";
  if (!std::filesystem::exists(path)) {
    state.SkipWithError("Kummer fixture absent");
    return;
  }
  auto k = load(path).complex;
  for (auto _ : state) {
    Complex fresh(k.facets(), k.labels());
    benchmark::DoNotOptimize(homology(fresh));
  }
}
BENCHMARK(BM_HomologyKummer);
