// Parallel kernels against their serial references.
//   ./bench_kernels --benchmark_filter=Enumerate

#include <benchmark/benchmark.h>

#include "chordpower/atlas.hpp"
#include "chordpower/reference.hpp"
#include "chordpower/synth.hpp"

namespace {

using namespace chordpower;

void BM_EnumerateParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_triads(n, false));
}

void BM_EnumerateSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::enumerate_triads(n, false));
}

SynthConfig harmonic() {
  SynthConfig cfg;
  cfg.timbre = Timbre::Harmonic;
  return cfg;
}

void BM_RenderParallel(benchmark::State& state) {
  const auto chord = chord_of({4, 5, 6});
  const auto cfg = harmonic();
  for (auto _ : state) benchmark::DoNotOptimize(render_chord(chord, cfg));
  state.SetItemsProcessed(state.iterations() * detail::sample_count(cfg));
}

void BM_RenderSerial(benchmark::State& state) {
  const auto chord = chord_of({4, 5, 6});
  const auto cfg = harmonic();
  for (auto _ : state) benchmark::DoNotOptimize(reference::render_chord(chord, cfg));
  state.SetItemsProcessed(state.iterations() * detail::sample_count(cfg));
}

}  // namespace

BENCHMARK(BM_EnumerateParallel)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RenderParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RenderSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
