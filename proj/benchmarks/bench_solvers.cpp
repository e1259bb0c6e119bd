#include <benchmark/benchmark.h>

#include <random>

#include "optsat/conflict_graph.hpp"
#include "optsat/solvers.hpp"

using namespace optsat;

namespace {

AssignmentProblem random_instance(std::mt19937_64& rng, int sats, int pairs, int cap) {
    std::uniform_real_distribution<double> weight(0.0, 1.0);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    AssignmentProblem p;
    p.num_sats = sats;
    p.num_stations = 2 * pairs;
    for (int j = 0; j < pairs; ++j) p.pairs.push_back({2 * j, 2 * j + 1});
    p.weights.resize(static_cast<size_t>(sats) * pairs);
    p.indicators.resize(static_cast<size_t>(sats) * pairs);
    for (size_t k = 0; k < p.weights.size(); ++k) {
        p.indicators[k] = coin(rng) < 0.8 ? 1 : 0;
        p.weights[k] = weight(rng);
    }
    p.transmitter_caps.assign(sats, cap);
    p.pair_caps.assign(pairs, cap);
    p.receiver_caps.assign(p.num_stations, std::max(cap, sats));
    return p;
}

void BM_SolveExact(benchmark::State& state) {
    std::mt19937_64 rng(42);
    const AssignmentProblem p =
        random_instance(rng, static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_exact(p));
    }
}
BENCHMARK(BM_SolveExact)->DenseRange(2, 8, 2);

void BM_SolveHungarian(benchmark::State& state) {
    std::mt19937_64 rng(43);
    AssignmentProblem p = random_instance(rng, static_cast<int>(state.range(0)),
                                          static_cast<int>(state.range(0)), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_hungarian(p));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveHungarian)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_GreedyBaseline(benchmark::State& state) {
    std::mt19937_64 rng(44);
    const AssignmentProblem p = random_instance(rng, static_cast<int>(state.range(0)),
                                                static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_greedy_baseline(p));
    }
}
BENCHMARK(BM_GreedyBaseline)->RangeMultiplier(4)->Range(8, 128);

void BM_MwisGreedy(benchmark::State& state) {
    std::mt19937_64 rng(45);
    AssignmentProblem p = random_instance(rng, static_cast<int>(state.range(0)),
                                          static_cast<int>(state.range(0)), 1);
    p.receiver_caps.assign(p.num_stations, 1);
    const ConflictGraph g = build_conflict_graph(p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_mwis_greedy(g));
    }
}
BENCHMARK(BM_MwisGreedy)->RangeMultiplier(2)->Range(4, 32);

}  // namespace

BENCHMARK_MAIN();
