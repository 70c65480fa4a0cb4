#include <benchmark/benchmark.h>

#include "hecke/counting.hpp"
#include "hecke/insertion.hpp"
#include "hecke/kjdt.hpp"
#include "hecke/measures.hpp"
#include "hecke/patience.hpp"
#include "hecke/word.hpp"

namespace hecke {

static void BM_Heckeshape(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int q = static_cast<int>(state.range(1));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const Word w = random_word(n, q, seed++);
    benchmark::DoNotOptimize(heckeshape(w));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Heckeshape)->Args({1000, 32})->Args({10000, 100})->Args({10000, 10000})->Args({4096, 8});

static void BM_HeckeFull(benchmark::State& state) {
  const Word w = random_word(static_cast<std::size_t>(state.range(0)), 50, 1);
  for (auto _ : state) benchmark::DoNotOptimize(hecke(w));
}
BENCHMARK(BM_HeckeFull)->Arg(1000)->Arg(5000);

static void BM_Lis(benchmark::State& state) {
  const Word w = random_word(static_cast<std::size_t>(state.range(0)), 1000, 2);
  for (auto _ : state) benchmark::DoNotOptimize(lis(w));
}
BENCHMARK(BM_Lis)->Arg(10000)->Arg(100000);

static void BM_Patience(benchmark::State& state) {
  const Word deck = sorted_deck(13, 4);
  Stream rng(3, 0);
  for (auto _ : state) benchmark::DoNotOptimize(pile_count(play_greedy(shuffle_deck(deck, rng), Ties::allowed)));
}
BENCHMARK(BM_Patience);

static void BM_CountIncreasing(benchmark::State& state) {
  const YoungDiagram shape({4, 3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(count_increasing(shape, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CountIncreasing)->Arg(5)->Arg(8);

static void BM_ExactPlancherelHecke(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(exact_plancherel_hecke(static_cast<int>(state.range(0)), 5));
}
BENCHMARK(BM_ExactPlancherelHecke)->Arg(6)->Arg(10);

static void BM_KRectify(benchmark::State& state) {
  const Word w = random_word(static_cast<std::size_t>(state.range(0)), 6, 4);
  for (auto _ : state) benchmark::DoNotOptimize(k_rectify(w));
}
BENCHMARK(BM_KRectify)->Arg(6)->Arg(10);

}  // namespace hecke

BENCHMARK_MAIN();
