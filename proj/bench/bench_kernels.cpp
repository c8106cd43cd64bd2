// Serial reference against the OpenMP kernels.
#include <benchmark/benchmark.h>

#include "pittslab/ipc.hpp"
#include "pittslab/pitts.hpp"

using namespace pittslab;

namespace {

// range(1) == 0: an IPC theorem, so every poset up to the bound is searched.
// range(1) == 1: refuted on three worlds.
Sequent benchSequent(bool refutable) {
  return parseSequent(refutable ? "|- (~P \\/ ~~P) \\/ ((Q -> R) \\/ (R -> Q))"
                                : "|- ((P \\/ Q) -> R) <-> ((P -> R) /\\ (Q -> R))");
}

void countermodel(benchmark::State& state, bool parallel) {
  int worlds = static_cast<int>(state.range(0));
  Sequent s = benchSequent(state.range(1) != 0);
  for (auto _ : state) {
    auto m = parallel ? findCountermodel(s, worlds) : findCountermodelSerial(s, worlds);
    benchmark::DoNotOptimize(m);
  }
}

void probeGate(benchmark::State& state, bool parallel) {
  Formula body = parseFormula("(~Y -> X1) /\\ (~~Y -> X2)");
  Formula cand = parseFormula("(~X1 -> X2) /\\ (~X2 -> X1)");
  auto probes = probeCorpus({"X1", "X2"}, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = parallel ? validateInterpolant(body, "Y", cand, probes) : validateInterpolantSerial(body, "Y", cand, probes);
    benchmark::DoNotOptimize(r);
  }
  state.counters["probes"] = static_cast<double>(probes.size());
}

}  // namespace

BENCHMARK_CAPTURE(countermodel, serial, false)->Args({6, 0})->Args({6, 1})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(countermodel, openmp, true)->Args({6, 0})->Args({6, 1})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(probeGate, serial, false)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(probeGate, openmp, true)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
