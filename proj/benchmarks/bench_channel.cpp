#include <benchmark/benchmark.h>

#include "optsat/channel.hpp"
#include "optsat/simulation.hpp"

using namespace optsat;

namespace {

SourceConfig reference_source() {
    SourceConfig s;
    s.mean_photon_number = 0.0078;
    s.repetition_rate_hz = 1e10;
    return s;
}

void BM_DensityRoute(benchmark::State& state) {
    const SourceConfig cfg = reference_source();
    const TruncatedSourceState src = source_state(cfg);
    double eta = 0.05;
    for (auto _ : state) {
        const DensityMatrix rho = apply_pure_loss(src, eta, 0.8 * eta);
        benchmark::DoNotOptimize(detect(rho, 0.0, +1));
        eta = eta < 0.9 ? eta + 1e-4 : 0.05;
    }
}
BENCHMARK(BM_DensityRoute);

void BM_EvaluatorRoute(benchmark::State& state) {
    const LinkMetricsEvaluator evaluator(reference_source());
    double eta = 0.05;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluator.eval(eta, 0.8 * eta));
        eta = eta < 0.9 ? eta + 1e-4 : 0.05;
    }
}
BENCHMARK(BM_EvaluatorRoute);

void BM_SlotInputs(benchmark::State& state) {
    ScenarioConfig s;
    s.constellation.num_rings = static_cast<int>(state.range(0));
    s.constellation.sats_per_ring = 10;
    s.constellation.altitude_m = 500e3;
    s.stations = {{"toronto", 43.6532, -79.3832}, {"new_york", 40.7128, -74.0060},
                  {"london", 51.5074, -0.1278},   {"singapore", 1.3521, 103.8198},
                  {"sydney", -33.8688, 151.2093}, {"rio", -22.9068, -43.1729},
                  {"mumbai", 19.0760, 72.8777}};
    int id = 0;
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b) s.pairs.push_back({id++, a, b});
    s.time = {1.0, 86400, 0.0};
    s.caps = {s.constellation.size(), 1, 1};
    s.policy = Policy::kHungarian;

    const LinkMetricsEvaluator evaluator(s.source);
    int slot = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_slot_inputs(s, evaluator, slot));
        slot = slot % 86400 + 1;
    }
}
BENCHMARK(BM_SlotInputs)->Arg(2)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
