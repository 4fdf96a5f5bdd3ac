#include <benchmark/benchmark.h>

#include "sabotage/alba.hpp"
#include "sabotage/cli.hpp"
#include "sabotage/fol.hpp"
#include "sabotage/parser.hpp"
#include "sabotage/semantics.hpp"

using namespace sabotage;

namespace {

const char* const kInputs[] = {
    "[]p -> p",
    "<!>[]p -> []<!>p",
    "[]p & []q -> [](p & q)",
    "<>(p & ~q) -> <>p",
    "[!]<>p -> p",
};

void BM_Parse(benchmark::State& state) {
  const char* text = "~(<>p & [!]q) -> ([]<>p | <!>[]q) <-> (p -> q -> <>top)";
  for (auto _ : state) benchmark::DoNotOptimize(parse_formula(text));
}
BENCHMARK(BM_Parse);

void BM_RunAlba(benchmark::State& state) {
  const Ineq in = parse_inequality(kInputs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(run_alba(in));
  state.SetLabel(kInputs[state.range(0)]);
}
BENCHMARK(BM_RunAlba)->DenseRange(0, 4);

void BM_FrameValid(benchmark::State& state) {
  const Statement s{parse_inequality(kInputs[state.range(0)])};
  const auto frames = enumerate_frames(3);
  for (auto _ : state) {
    int valid = 0;
    for (const auto& f : frames) valid += frame_valid(f, s);
    benchmark::DoNotOptimize(valid);
  }
  state.SetLabel(kInputs[state.range(0)]);
}
BENCHMARK(BM_FrameValid)->DenseRange(0, 4);

void BM_CheckCorrespondent(benchmark::State& state) {
  const Ineq in = parse_inequality(kInputs[state.range(0)]);
  const FOFormula fo = correspondent(run_alba(in).output);
  for (auto _ : state) benchmark::DoNotOptimize(check_correspondent(in, fo, 3));
  state.SetLabel(kInputs[state.range(0)]);
}
BENCHMARK(BM_CheckCorrespondent)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
