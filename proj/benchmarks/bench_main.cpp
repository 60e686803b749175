#include <benchmark/benchmark.h>

#include "rll/dimension.hpp"
#include "rll/markov.hpp"
#include "rll/measure.hpp"
#include "rll/univoque.hpp"
#include "rll/words.hpp"

namespace {

void BM_EnumerateWords(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rll::enumerate_words(4, n));
}
BENCHMARK(BM_EnumerateWords)->Arg(12)->Arg(16)->Arg(20);

void BM_PullbackSeriesExact(benchmark::State& state) {
  const rll::BernoulliTypeMeasure<rll::Rational> mu(5, rll::Rational(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(rll::pullback_series(mu, state.range(0)));
}
BENCHMARK(BM_PullbackSeriesExact)->Arg(20)->Arg(80);

void BM_PullbackSeriesFloat(benchmark::State& state) {
  const rll::BernoulliTypeMeasure<double> mu(5, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(rll::pullback_series(mu, state.range(0)));
}
BENCHMARK(BM_PullbackSeriesFloat)->Arg(1000)->Arg(10000);

void BM_StationaryExact(benchmark::State& state) {
  const auto chain = rll::build_chain(static_cast<int>(state.range(0)), rll::Rational(2, 7));
  for (auto _ : state) benchmark::DoNotOptimize(rll::stationary(chain));
}
BENCHMARK(BM_StationaryExact)->Arg(3)->Arg(8)->Arg(16);

void BM_Sample(benchmark::State& state) {
  const auto chain = rll::build_chain(3, 0.2);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rll::sample(chain, n, 20190611));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sample)->Arg(100000)->Arg(1000000);

void BM_SolveQm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rll::solve_qm(static_cast<int>(state.range(0)), 0.3));
}
BENCHMARK(BM_SolveQm)->Arg(10)->Arg(100);

void BM_GammaPrefix(benchmark::State& state) {
  const rll::SequenceWindow w{rll::EventuallyPeriodicSequence("11", "10").prefix(state.range(0)), true};
  for (auto _ : state) benchmark::DoNotOptimize(rll::gamma_check_prefix(w, w.size() - 1));
}
BENCHMARK(BM_GammaPrefix)->Arg(256)->Arg(2048);

}  // namespace

BENCHMARK_MAIN();
