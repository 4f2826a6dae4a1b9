// Serial versus OpenMP kernels on inputs of growing size.

#include <benchmark/benchmark.h>

#include "eqlift/complex.hpp"
#include "eqlift/forge.hpp"
#include "eqlift/group.hpp"
#include "eqlift/lifter.hpp"

namespace {

using eqlift::Exec;

Exec exec_of(const benchmark::State& state) { return state.range(1) == 0 ? Exec::serial : Exec::parallel; }

void BM_Associativity(benchmark::State& state) {
  const auto t = eqlift::make_cyclic(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eqlift::find_nonassociative(t, exec_of(state)));
  state.SetLabel(state.range(1) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_Associativity)->ArgsProduct({{60, 120, 240}, {0, 1}})->Unit(benchmark::kMillisecond);

const eqlift::BranchedCoverSurface& cover(int l) {
  static const eqlift::BranchedCoverSurface c2 = eqlift::forge_surface(2);
  static const eqlift::BranchedCoverSurface c3 = eqlift::forge_surface(3);
  return l == 2 ? c2 : c3;
}

void BM_Homomorphism(benchmark::State& state) {
  const auto& c = cover(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eqlift::homomorphism_failures(c.deck, exec_of(state)));
  state.SetLabel(state.range(1) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_Homomorphism)->ArgsProduct({{2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_PLEmbedding(benchmark::State& state) {
  const auto c = eqlift::with_canonical_coordinates(cover(static_cast<int>(state.range(0))).surface);
  for (auto _ : state) benchmark::DoNotOptimize(eqlift::verify_pl_embedding(c, exec_of(state)).embedded());
  state.SetLabel(state.range(1) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_PLEmbedding)->ArgsProduct({{2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Equivariance(benchmark::State& state) {
  const auto& c = cover(static_cast<int>(state.range(0)));
  const auto le = eqlift::determinant_extend(
      eqlift::stack_embedding(eqlift::with_canonical_coordinates(c.surface), c.deck));
  for (auto _ : state) benchmark::DoNotOptimize(eqlift::verify_equivariance(le, c.deck, exec_of(state)).passed());
  state.SetLabel(state.range(1) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_Equivariance)->Args({2, 0})->Args({2, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
