#include "dedekind/cuts/cut.hpp"
#include "dedekind/dsl/parser.hpp"
#include "dedekind/numbers/rational.hpp"
#include "dedekind/peano/models.hpp"
#include "dedekind/recfn/eval.hpp"
#include "dedekind/recfn/library.hpp"

#include <benchmark/benchmark.h>

using namespace dedekind;

namespace {

const recfn::Evaluator& library() {
  static const recfn::Evaluator ev(recfn::standard_definitions());
  return ev;
}

void eval_call(benchmark::State& state, const char* name, std::vector<Natural> args) {
  std::uint64_t steps = 0;
  for (auto _ : state) {
    recfn::EvalBudget b(1'000'000'000);
    benchmark::DoNotOptimize(library().eval(recfn::ref(name), args, b));
    steps += b.consumed;
  }
  state.counters["steps/s"] = benchmark::Counter(static_cast<double>(steps), benchmark::Counter::kIsRate);
}

void BM_Add(benchmark::State& state) { eval_call(state, "add", {state.range(0), state.range(0)}); }
BENCHMARK(BM_Add)->Arg(10)->Arg(100)->Arg(1000);

void BM_Mul(benchmark::State& state) { eval_call(state, "mul", {state.range(0), state.range(0)}); }
BENCHMARK(BM_Mul)->Arg(10)->Arg(100);

void BM_Monus(benchmark::State& state) { eval_call(state, "monus", {state.range(0), state.range(0) / 2}); }
BENCHMARK(BM_Monus)->Arg(100)->Arg(1000);

void BM_Isqrt(benchmark::State& state) { eval_call(state, "isqrt", {state.range(0)}); }
BENCHMARK(BM_Isqrt)->Arg(100)->Arg(10'000);

void BM_ParsePrelude(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dsl::parse(dsl::prelude_source()));
}
BENCHMARK(BM_ParsePrelude);

void BM_Iso(benchmark::State& state) {
  const auto a = peano::unary_model(), b = peano::binary_model();
  for (auto _ : state) benchmark::DoNotOptimize(peano::build_iso(a, b, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Iso)->Arg(100)->Arg(1000);

void BM_SqrtApprox(benchmark::State& state) {
  numbers::RatClass e = numbers::RatClass::from_int(1);
  for (int i = 0; i < state.range(0); ++i) e = e * numbers::RatClass::from_ints(1, 10);
  const auto c = cuts::cut_sqrt(2);
  for (auto _ : state) benchmark::DoNotOptimize(cuts::approx(c, e));
}
BENCHMARK(BM_SqrtApprox)->Arg(6)->Arg(30);

void BM_ProductApprox(benchmark::State& state) {
  const auto c = cuts::cut_mul(cuts::cut_sqrt(2), cuts::cut_sqrt(3));
  const auto eps = numbers::RatClass::from_ints(1, 1'000'000);
  for (auto _ : state) benchmark::DoNotOptimize(cuts::approx(c, eps));
}
BENCHMARK(BM_ProductApprox);

}  // namespace

BENCHMARK_MAIN();
