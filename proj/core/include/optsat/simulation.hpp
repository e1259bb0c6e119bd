#ifndef OPTSAT_SIMULATION_HPP
#define OPTSAT_SIMULATION_HPP

// Slot loop: propagate geometry, evaluate link metrics, build and solve the
// per-slot assignment problem under a policy, aggregate entanglement counts.
//
// Slots are independent (the formulation is memoryless), so the loop fans
// slot computations out to a small worker pool; records land in a
// slot-indexed vector, keeping reports deterministic regardless of thread
// scheduling.

#include <cstdint>
#include <string>
#include <vector>

#include "optsat/channel.hpp"
#include "optsat/conflict_graph.hpp"
#include "optsat/orbital.hpp"
#include "optsat/problem.hpp"
#include "optsat/solvers.hpp"

namespace optsat {

enum class Policy { kExact, kHungarian, kMwisGreedy, kGreedyBaseline };

const char* policy_name(Policy policy);
Policy policy_from_name(const std::string& name);

// Expected counts (psi * slot duration) by default; the sampled mode draws
// seeded Poisson counts for studies that need integer outcomes.
enum class CountMode { kExpected, kSampled };

struct ScenarioConfig {
    Constellation constellation;
    std::vector<GroundStation> stations;
    std::vector<StationPair> pairs;
    TimeGrid time;

    OpticalConfig optics;
    double atmosphere_thickness_m = kDefaultAtmosphereThicknessM;
    SourceConfig source;

    double fidelity_threshold = 0.95;
    double elevation_limit_rad = 0.0;
    CapsConfig caps;

    WeightMode weight_mode = WeightMode::kRate;
    std::vector<double> request_rates;  // per pair, request-rate mode only

    Policy policy = Policy::kExact;
    std::vector<int> greedy_pair_order;  // optional; default ascending pair id

    CountMode count_mode = CountMode::kExpected;
    uint64_t seed = 0;
    int num_threads = 0;  // 0 = hardware concurrency

    // Station references, pair duplicates, policy preconditions against the
    // caps, table presence. Throws std::invalid_argument.
    void validate() const;
    void validate_policy(Policy policy) const;
};

struct AssignedLink {
    int sat = 0;
    int pair = 0;
    double psi_hz = 0.0;
    double chi = 0.0;
    double count = 0.0;
};

struct SlotRecord {
    int slot = 0;
    double objective = 0.0;
    double count = 0.0;  // sum of link counts
    std::vector<AssignedLink> links;
};

struct WallStats {
    double elapsed_s = 0.0;
    int threads = 1;
};

struct SimulationReport {
    std::string policy;
    double slot_s = 1.0;
    int num_slots = 0;
    std::vector<SlotRecord> slots;
    std::vector<double> pair_totals;
    // Left-fold of the per-slot counts in slot order.
    double grand_total = 0.0;
    WallStats wall;  // not serialized, ignored by comparisons
};

bool reports_equal(const SimulationReport& a, const SimulationReport& b);

SimulationReport run_simulation(const ScenarioConfig& scenario);

// Runs every policy on identical per-slot geometry and metrics (computed
// once, shared), one report per policy in input order.
std::vector<SimulationReport> compare_policies(const ScenarioConfig& scenario,
                                               const std::vector<Policy>& policies);

struct SweepRow {
    double altitude_m = 0.0;
    std::string policy;
    double grand_total = 0.0;
    double gap_vs_exact = 0.0;  // (exact - policy) / exact, 0 when exact is 0
};

// Re-runs compare_policies for each altitude with everything else fixed.
// Policy::kExact is always included as the gap reference.
std::vector<SweepRow> altitude_sweep(const ScenarioConfig& scenario,
                                     const std::vector<double>& altitudes_m,
                                     const std::vector<Policy>& policies);

// Single-slot inputs shared across policies; exposed for tests.
ProblemInputs compute_slot_inputs(const ScenarioConfig& scenario,
                                  const LinkMetricsEvaluator& evaluator, int slot);

}  // namespace optsat

#endif  // OPTSAT_SIMULATION_HPP
