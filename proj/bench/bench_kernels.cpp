// Serial reference kernels against their OpenMP counterparts on adjacency
// matrices of squarefree types, which are the largest inputs the library sees.
#include <benchmark/benchmark.h>

#include "divgraph/graph.hpp"
#include "divgraph/kernels.hpp"

namespace {

using namespace divgraph;

IntMatrix squarefree(unsigned omega, std::int64_t shift) {
  return shifted(to_int_matrix(graph::DivGraph::build(graph::Shape(omega, 1)).adjacency()), shift);
}

const Modulus kMod(2147483647u);

template <auto Fn>
void rref(benchmark::State& state) {
  const IntMatrix m = squarefree(static_cast<unsigned>(state.range(0)), -1);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(m, kMod));
  state.SetComplexityN(static_cast<long>(m.rows()));
}

template <auto Fn>
void charpoly(benchmark::State& state) {
  const IntMatrix m = squarefree(static_cast<unsigned>(state.range(0)), 0);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(m, kMod));
}

template <auto Fn>
void bareiss(benchmark::State& state) {
  const IntMatrix m = squarefree(static_cast<unsigned>(state.range(0)), 0);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(m));
}

}  // namespace

BENCHMARK(rref<kernels::serial::rref_mod>)->Name("rref_mod/serial")->DenseRange(6, 11)->Unit(benchmark::kMillisecond);
BENCHMARK(rref<kernels::parallel::rref_mod>)->Name("rref_mod/parallel")->DenseRange(6, 11)->Unit(benchmark::kMillisecond);
BENCHMARK(charpoly<kernels::serial::charpoly_mod>)->Name("charpoly_mod/serial")->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(charpoly<kernels::parallel::charpoly_mod>)->Name("charpoly_mod/parallel")->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(bareiss<kernels::serial::bareiss_determinant>)->Name("bareiss/serial")->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(bareiss<kernels::parallel::bareiss_determinant>)->Name("bareiss/parallel")->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
