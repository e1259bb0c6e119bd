#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "optsat/report_io.hpp"
#include "optsat/simulation.hpp"

using namespace optsat;

namespace {

// Two stations a fraction of a degree apart with a 1-satellite "constellation"
// passing overhead: slot 1 places the satellite near both zeniths.
ScenarioConfig zenith_scenario() {
    ScenarioConfig s;
    s.constellation.num_rings = 1;
    s.constellation.sats_per_ring = 1;
    s.constellation.altitude_m = 500e3;
    s.stations = {{"a", 0.2, 0.0}, {"b", -0.2, 0.0}};
    s.pairs = {{0, 0, 1}};
    s.time = {1.0, 1, 0.0};
    s.caps = {1, 1, 1};
    s.fidelity_threshold = 0.9;
    s.policy = Policy::kExact;
    s.num_threads = 1;
    return s;
}

ScenarioConfig small_constellation_scenario(int num_slots = 400, double altitude_m = 2000e3) {
    ScenarioConfig s;
    s.constellation.num_rings = 3;
    s.constellation.sats_per_ring = 6;
    s.constellation.altitude_m = altitude_m;
    s.stations = {{"toronto", 43.6532, -79.3832},
                  {"new_york", 40.7128, -74.0060},
                  {"london", 51.5074, -0.1278}};
    s.pairs = {{0, 0, 1}, {1, 0, 2}, {2, 1, 2}};
    s.time = {1.0, num_slots, 0.0};
    s.caps = {2, 1, 1};
    s.fidelity_threshold = 0.95;
    s.policy = Policy::kExact;
    s.num_threads = 2;
    return s;
}

}  // namespace

TEST_CASE("single candidate at zenith yields one assignment with count psi * slot") {
    const ScenarioConfig s = zenith_scenario();
    const SimulationReport report = run_simulation(s);
    REQUIRE(report.slots.size() == 1);
    const SlotRecord& slot = report.slots[0];
    REQUIRE(slot.links.size() == 1);
    CHECK(slot.links[0].sat == 0);
    CHECK(slot.links[0].pair == 0);
    CHECK(slot.links[0].psi_hz > 0.0);
    CHECK(slot.links[0].chi >= s.fidelity_threshold);
    CHECK(slot.links[0].count ==
          doctest::Approx(slot.links[0].psi_hz * s.time.slot_s).epsilon(1e-15));
    CHECK(report.grand_total == slot.count);
}

TEST_CASE("raising the elevation limit above every pass zeroes the totals") {
    ScenarioConfig s = zenith_scenario();
    s.elevation_limit_rad = deg_to_rad(89.9);
    const SimulationReport report = run_simulation(s);
    CHECK(report.grand_total == 0.0);
    for (const SlotRecord& slot : report.slots) CHECK(slot.links.empty());
}

TEST_CASE("identical configs produce identical reports, including serialized bytes") {
    const ScenarioConfig s = small_constellation_scenario(120);
    const SimulationReport a = run_simulation(s);
    const SimulationReport b = run_simulation(s);
    CHECK(reports_equal(a, b));
    CHECK(report_to_json(a).dump(2) == report_to_json(b).dump(2));
}

TEST_CASE("multithreaded run matches the single-threaded run") {
    ScenarioConfig s = small_constellation_scenario(150);
    s.num_threads = 1;
    const SimulationReport serial = run_simulation(s);
    s.num_threads = 4;
    const SimulationReport parallel = run_simulation(s);
    CHECK(reports_equal(serial, parallel));
}

TEST_CASE("sampled count mode is seeded and deterministic") {
    ScenarioConfig s = small_constellation_scenario(60);
    s.count_mode = CountMode::kSampled;
    s.seed = 991;
    const SimulationReport a = run_simulation(s);
    const SimulationReport b = run_simulation(s);
    CHECK(reports_equal(a, b));
    for (const SlotRecord& slot : a.slots)
        for (const AssignedLink& link : slot.links)
            CHECK(link.count == std::floor(link.count));  // integer draws

    ScenarioConfig other = s;
    other.seed = 992;
    const SimulationReport c = run_simulation(other);
    CHECK_FALSE(reports_equal(a, c));
}

TEST_CASE("conservation: grand total equals slot-count fold and pair totals") {
    const ScenarioConfig s = small_constellation_scenario(300);
    const SimulationReport report = run_simulation(s);
    CHECK(report.grand_total > 0.0);

    double slot_fold = 0.0;
    for (const SlotRecord& slot : report.slots) {
        double slot_sum = 0.0;
        for (const AssignedLink& link : slot.links) slot_sum += link.count;
        CHECK(slot_sum == slot.count);  // same left-fold the loop produced
        slot_fold += slot.count;
    }
    CHECK(slot_fold == report.grand_total);  // bit-exact by construction

    std::vector<double> pair_totals(s.pairs.size(), 0.0);
    for (const SlotRecord& slot : report.slots)
        for (const AssignedLink& link : slot.links) pair_totals[link.pair] += link.count;
    REQUIRE(pair_totals.size() == report.pair_totals.size());
    double pair_sum = 0.0;
    for (size_t j = 0; j < pair_totals.size(); ++j) {
        CHECK(pair_totals[j] == report.pair_totals[j]);
        pair_sum += report.pair_totals[j];
    }
    // Regrouping by pair reassociates the float sum; allow rounding slack.
    CHECK(pair_sum == doctest::Approx(report.grand_total).epsilon(1e-12));
}

TEST_CASE("no assigned link violates the visibility or fidelity gates") {
    ScenarioConfig s = small_constellation_scenario(300);
    s.elevation_limit_rad = deg_to_rad(12.0);
    const LinkMetricsEvaluator evaluator(s.source);
    const SimulationReport report = run_simulation(s);
    for (const SlotRecord& slot : report.slots) {
        const ProblemInputs inputs = compute_slot_inputs(s, evaluator, slot.slot);
        for (const AssignedLink& link : slot.links) {
            const auto& candidate = inputs.links[inputs.cell(link.sat, link.pair)];
            REQUIRE(candidate.has_value());
            CHECK(candidate->elevation1_rad >= s.elevation_limit_rad);
            CHECK(candidate->elevation2_rad >= s.elevation_limit_rad);
            CHECK(candidate->metrics.fidelity >= s.fidelity_threshold);
            CHECK(link.chi == candidate->metrics.fidelity);
            CHECK(link.psi_hz == candidate->metrics.rate_hz);
        }
    }
}

TEST_CASE("compare_policies shares inputs and preserves per-slot dominance") {
    ScenarioConfig s = small_constellation_scenario(400);
    const auto reports =
        compare_policies(s, {Policy::kExact, Policy::kGreedyBaseline});
    REQUIRE(reports.size() == 2);
    const SimulationReport& exact = reports[0];
    const SimulationReport& greedy = reports[1];
    CHECK(exact.policy == "exact");
    CHECK(greedy.policy == "greedy_baseline");
    for (int t = 0; t < exact.num_slots; ++t)
        CHECK(greedy.slots[t].objective <= exact.slots[t].objective + 1e-9);
    CHECK(greedy.grand_total <= exact.grand_total + 1e-6);
}

TEST_CASE("hungarian equals exact under the matching caps") {
    ScenarioConfig s = small_constellation_scenario(400);
    s.caps = {s.constellation.size(), 1, 1};  // R_g = N
    s.policy = Policy::kHungarian;
    const auto reports = compare_policies(s, {Policy::kExact, Policy::kHungarian});
    for (int t = 0; t < reports[0].num_slots; ++t)
        CHECK(reports[1].slots[t].objective ==
              doctest::Approx(reports[0].slots[t].objective).epsilon(1e-9));
    CHECK(reports[1].grand_total ==
          doctest::Approx(reports[0].grand_total).epsilon(1e-9));
}

TEST_CASE("mwis_greedy policy runs under all-one caps and is dominated by exact") {
    ScenarioConfig s = small_constellation_scenario(300);
    s.caps = {1, 1, 1};
    const auto reports = compare_policies(s, {Policy::kExact, Policy::kMwisGreedy});
    for (int t = 0; t < reports[0].num_slots; ++t)
        CHECK(reports[1].slots[t].objective <= reports[0].slots[t].objective + 1e-9);
}

TEST_CASE("single-policy compare matches run_simulation") {
    const ScenarioConfig s = small_constellation_scenario(80);
    const SimulationReport direct = run_simulation(s);
    const auto reports = compare_policies(s, {Policy::kExact});
    CHECK(reports_equal(direct, reports[0]));
}

TEST_CASE("altitude sweep emits one row per altitude and policy, gaps in [0,1]") {
    ScenarioConfig s = small_constellation_scenario(200);
    const auto rows = altitude_sweep(s, {1000e3, 4000e3}, {Policy::kGreedyBaseline});
    REQUIRE(rows.size() == 4);  // exact + greedy per altitude
    for (const SweepRow& row : rows) {
        CHECK(row.gap_vs_exact >= 0.0);
        CHECK(row.gap_vs_exact <= 1.0);
    }
    CHECK(rows[0].policy == "exact");
    CHECK(rows[1].policy == "greedy_baseline");
    CHECK(rows[0].gap_vs_exact == 0.0);
    CHECK_THROWS_AS(altitude_sweep(s, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(altitude_sweep(s, {-5.0}, {}), std::invalid_argument);
}

TEST_CASE("policy preconditions are validated before the loop") {
    ScenarioConfig s = small_constellation_scenario(10);
    s.caps = {2, 2, 1};
    s.policy = Policy::kHungarian;
    CHECK_THROWS_AS(run_simulation(s), std::invalid_argument);
    s.policy = Policy::kMwisGreedy;
    CHECK_THROWS_AS(run_simulation(s), std::invalid_argument);
    s.policy = Policy::kExact;
    CHECK_NOTHROW(run_simulation(s));
}

TEST_CASE("scenario validation catches bad references and duplicates") {
    ScenarioConfig s = small_constellation_scenario(10);
    s.pairs.push_back({3, 0, 1});  // duplicate of pair 0
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = small_constellation_scenario(10);
    s.pairs.push_back({3, 2, 5});  // unknown station
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = small_constellation_scenario(10);
    s.stations.push_back({"toronto", 1.0, 2.0});  // duplicate id
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = small_constellation_scenario(10);
    s.caps = {1, 1, 2};  // R_g < L_j
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("policy names round-trip") {
    for (Policy p : {Policy::kExact, Policy::kHungarian, Policy::kMwisGreedy,
                     Policy::kGreedyBaseline})
        CHECK(policy_from_name(policy_name(p)) == p);
    CHECK_THROWS_AS(policy_from_name("simulated_annealing"), std::invalid_argument);
}
