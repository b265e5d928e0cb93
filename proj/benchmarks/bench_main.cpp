#include <benchmark/benchmark.h>

#include <vector>

#include "covergame/adversary_search.hpp"
#include "covergame/evaluator.hpp"
#include "covergame/game.hpp"
#include "covergame/permutation.hpp"
#include "covergame/rng.hpp"
#include "covergame/strategy.hpp"

namespace {

using namespace covergame;

std::vector<double> spread_values(int n) {
  std::vector<double> values(n);
  for (int i = 0; i < n; ++i) {
    values[i] = 2.5 - 5.0 * static_cast<double>(i) / (n - 1);
  }
  return values;
}

void BM_LehmerRoundtrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RngStream rng(1);
  const Permutation sigma = sample_permutation(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lehmer_decode(lehmer_encode(sigma)));
  }
}
BENCHMARK(BM_LehmerRoundtrip)->Arg(8)->Arg(12);

void BM_SoftmaxGuess(benchmark::State& state) {
  const std::vector<double> visible = spread_values(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(softmax_guess(visible));
  }
}
BENCHMARK(BM_SoftmaxGuess)->Arg(4)->Arg(12);

void BM_ExactEnum(benchmark::State& state) {
  const AdversaryInput input(spread_values(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_win_prob_enum(input));
  }
}
BENCHMARK(BM_ExactEnum)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_DpWinProb(benchmark::State& state) {
  const AdversaryInput input(spread_values(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dp_win_prob(input));
  }
}
BENCHMARK(BM_DpWinProb)->Arg(8)->Arg(12)->Arg(16)->Arg(20)
    ->Unit(benchmark::kMillisecond);

void BM_McEstimate(benchmark::State& state) {
  const AdversaryInput input(spread_values(4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        mc_estimate(input, static_cast<std::uint64_t>(state.range(0)), 7));
  }
}
BENCHMARK(BM_McEstimate)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_MinimizeEdge(benchmark::State& state) {
  SearchConfig config;
  config.n = static_cast<int>(state.range(0));
  config.restarts = 2;
  config.max_iters = 200;
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimize_edge(config));
  }
}
BENCHMARK(BM_MinimizeEdge)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
