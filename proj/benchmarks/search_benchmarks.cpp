#include "anytime/core/open_list.hpp"
#include "anytime/domains/msa.hpp"
#include "anytime/domains/tiles.hpp"
#include "anytime/harness/generate.hpp"
#include "anytime/rbfs/rbfs.hpp"
#include "anytime/search/best_first.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace anytime;

namespace {

std::vector<tiles::TileState> boards(std::size_t n) {
    std::vector<tiles::TileState> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(harness::generate_tiles({3, 0}, i + 1));
    return out;
}

void BM_OpenListPushPop(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::uint64_t> key(0, 1000);
    for (auto _ : state) {
        OpenList open;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t k = key(rng);
            open.push(OpenEntry{state_id(i), Key(k), Cost(k / 2), Cost(k)});
        }
        while (!open.empty())
            benchmark::DoNotOptimize(open.pop_min());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_OpenListPushPop)->Arg(1 << 10)->Arg(1 << 16);

void BM_AStarEightPuzzle(benchmark::State &state) {
    const auto sample = boards(20);
    std::uint64_t expanded = 0;
    for (auto _ : state)
        for (const auto &b : sample)
            expanded += astar(tiles::TilePuzzle(b)).stats.expansions;
    state.counters["expansions/s"] = benchmark::Counter(static_cast<double>(expanded), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_AStarEightPuzzle)->Unit(benchmark::kMillisecond);

void BM_AnytimeWAStarEightPuzzle(benchmark::State &state) {
    const auto sample = boards(20);
    const WeightSpec w(static_cast<std::uint64_t>(state.range(0)), 10);
    std::uint64_t expanded = 0;
    for (auto _ : state)
        for (const auto &b : sample)
            expanded += anytime_wastar(tiles::TilePuzzle(b), w).stats.expansions;
    state.counters["expansions/s"] = benchmark::Counter(static_cast<double>(expanded), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_AnytimeWAStarEightPuzzle)->Arg(13)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_AnytimeWrbfsEightPuzzle(benchmark::State &state) {
    const auto sample = boards(20);
    const WeightSpec w(static_cast<std::uint64_t>(state.range(0)), 10);
    RbfsOptions opts;
    opts.track_distinct = false;
    std::uint64_t calls = 0;
    for (auto _ : state)
        for (const auto &b : sample)
            calls += anytime_wrbfs(tiles::TilePuzzle(b), w, opts).stats.recursive_calls;
    state.counters["calls/s"] = benchmark::Counter(static_cast<double>(calls), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_AnytimeWrbfsEightPuzzle)->Arg(13)->Arg(15)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_AnytimeWAStarAlignment(benchmark::State &state) {
    const auto seqs = harness::generate_sequences({3, 30, 30}, 7);
    const msa::MsaProblem problem(seqs, msa::ScoringScheme::pam250());
    for (auto _ : state)
        benchmark::DoNotOptimize(anytime_wastar(problem, WeightSpec(100, 99)).incumbent);
}
BENCHMARK(BM_AnytimeWAStarAlignment)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
