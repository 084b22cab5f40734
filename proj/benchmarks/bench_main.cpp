#include <richwords/eliminator.hpp>
#include <richwords/extension.hpp>
#include <richwords/pal_index.hpp>
#include <richwords/reduction.hpp>
#include <richwords/search.hpp>

#include <benchmark/benchmark.h>

using namespace richwords;

namespace {

const Alphabet decimal(10);

// Iterated standard extension gives long rich words cheaply.
Word long_rich_word(std::size_t n) {
    Word w = Word::parse("0110", Alphabet(2));
    while (w.size() < n) w = std_ext1(w);
    return w;
}

} // namespace

static void BM_IsRich(benchmark::State& state) {
    const Word w = long_rich_word(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_rich(w));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IsRich)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

static void BM_CountRich(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_rich({2, n}));
}
BENCHMARK(BM_CountRich)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

static void BM_ReduceWord(benchmark::State& state) {
    const Word w = Word::parse("12145656547745656545656547874", decimal);
    const Word r = Word::parse("656", decimal);
    for (auto _ : state) benchmark::DoNotOptimize(rdc_wrd(w, r));
}
BENCHMARK(BM_ReduceWord);

static void BM_Eliminate(benchmark::State& state) {
    const Word w = Word::parse("12145656547745656545656547874", decimal);
    const Word a = Word::parse("12", decimal), b = Word::parse("74", decimal);
    for (auto _ : state) benchmark::DoNotOptimize(elm(w, a, b));
}
BENCHMARK(BM_Eliminate);

BENCHMARK_MAIN();
