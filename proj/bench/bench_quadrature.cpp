// Serial reference vs OpenMP simplex kernel on the diagram integrands.

#include <benchmark/benchmark.h>

#include "anharm/quadrature.hpp"
#include "anharm/variational.hpp"

namespace {

using namespace anharm;

void run(benchmark::State& state, Execution execution) {
  const int index = static_cast<int>(state.range(0));
  const int panels = static_cast<int>(state.range(1));
  const ModelParams p{1, 1, 1, 2};
  const Propagator g(solve_gap(p).omega_big, p.mass, p.beta);
  const auto rule = gauss_legendre(32);
  const DiagramSpec d = builtin_diagrams()[index];
  for (auto _ : state) {
    benchmark::DoNotOptimize(diagram_integral(g, d, panels, rule, execution, QuadPath::TranslationReduced));
  }
  state.SetLabel(d.name);
}

void BM_Serial(benchmark::State& state) { run(state, Execution::Serial); }
void BM_Parallel(benchmark::State& state) { run(state, Execution::Parallel); }

BENCHMARK(BM_Serial)->Args({1, 8})->Args({1, 32})->Args({3, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->Args({1, 8})->Args({1, 32})->Args({3, 2})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
