// Serial reference scans against their OpenMP counterparts.

#include "eurep/axiom_checks.hpp"

#include <benchmark/benchmark.h>

using namespace eurep;

namespace {

PreferenceOracle eu() {
  return PreferenceOracle::expected_utility(UtilityFunction{{Rational(0), Rational(1), Rational(2)}});
}

Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

void set_label(benchmark::State& state) { state.SetLabel(state.range(1) == 0 ? "serial" : "parallel"); }

void BM_WeakOrder(benchmark::State& state) {
  const auto o = eu();
  const GridSpec g{static_cast<std::size_t>(state.range(0)), 2};
  for (auto _ : state) benchmark::DoNotOptimize(check_weak_order(o, g, mode(state)));
  set_label(state);
}

void BM_Independence(benchmark::State& state) {
  const auto o = eu();
  const GridSpec g{static_cast<std::size_t>(state.range(0)), 2};
  for (auto _ : state)
    benchmark::DoNotOptimize(check_independence(o, g, IndependenceVariant::independence, mode(state)));
  set_label(state);
}

void BM_LineOrder(benchmark::State& state) {
  const auto o = eu();
  const GridSpec g{static_cast<std::size_t>(state.range(0)), 2};
  for (auto _ : state) benchmark::DoNotOptimize(check_line_order(o, g, mode(state)));
  set_label(state);
}

void BM_Archimedean(benchmark::State& state) {
  const auto o = eu();
  const GridSpec g{static_cast<std::size_t>(state.range(0)), 2};
  for (auto _ : state)
    benchmark::DoNotOptimize(check_continuity(o, ContinuityKind::archimedean, g, kDefaultDepth, mode(state)));
  set_label(state);
}

}  // namespace

BENCHMARK(BM_WeakOrder)->ArgsProduct({{6, 10}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Independence)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LineOrder)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Archimedean)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
