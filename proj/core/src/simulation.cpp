#include "optsat/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace optsat {

const char* policy_name(Policy policy) {
    switch (policy) {
        case Policy::kExact: return "exact";
        case Policy::kHungarian: return "hungarian";
        case Policy::kMwisGreedy: return "mwis_greedy";
        case Policy::kGreedyBaseline: return "greedy_baseline";
    }
    return "unknown";
}

Policy policy_from_name(const std::string& name) {
    if (name == "exact") return Policy::kExact;
    if (name == "hungarian") return Policy::kHungarian;
    if (name == "mwis_greedy") return Policy::kMwisGreedy;
    if (name == "greedy_baseline") return Policy::kGreedyBaseline;
    throw std::invalid_argument("unknown policy '" + name + "'");
}

void ScenarioConfig::validate() const {
    constellation.validate();
    time.validate();
    optics.validate();
    source.validate();
    if (stations.empty()) throw std::invalid_argument("scenario: needs at least one station");
    std::unordered_set<std::string> ids;
    for (const auto& s : stations) {
        s.validate();
        if (!ids.insert(s.id).second)
            throw std::invalid_argument("scenario: duplicate station id '" + s.id + "'");
    }
    if (pairs.empty()) throw std::invalid_argument("scenario: needs at least one pair");
    std::unordered_set<int64_t> seen;
    for (const auto& p : pairs) {
        const int n = static_cast<int>(stations.size());
        if (p.first < 0 || p.first >= n || p.second < 0 || p.second >= n)
            throw std::invalid_argument("scenario: pair references unknown station");
        if (p.first == p.second)
            throw std::invalid_argument("scenario: pair stations must differ");
        const int64_t key = static_cast<int64_t>(std::min(p.first, p.second)) * n +
                            std::max(p.first, p.second);
        if (!seen.insert(key).second)
            throw std::invalid_argument("scenario: duplicate station pair");
    }
    if (!(fidelity_threshold >= 0.0 && fidelity_threshold <= 1.0))
        throw std::invalid_argument("scenario: fidelity threshold outside [0, 1]");
    if (!(elevation_limit_rad >= 0.0 && elevation_limit_rad < kPi / 2.0))
        throw std::invalid_argument("scenario: elevation limit outside [0, pi/2)");
    if (caps.receiver < 0 || caps.transmitter < 0 || caps.pair < 0)
        throw std::invalid_argument("scenario: caps must be >= 0");
    if (caps.receiver < caps.pair)
        throw std::invalid_argument("scenario: requires R_g >= L_j");
    if (weight_mode == WeightMode::kRequestRate &&
        request_rates.size() != pairs.size())
        throw std::invalid_argument("scenario: request-rate mode needs one rate per pair");
    if (!greedy_pair_order.empty()) {
        std::vector<char> seen_pair(pairs.size(), 0);
        if (greedy_pair_order.size() != pairs.size())
            throw std::invalid_argument("scenario: greedy pair order must list every pair once");
        for (int j : greedy_pair_order) {
            if (j < 0 || j >= static_cast<int>(pairs.size()) || seen_pair[j])
                throw std::invalid_argument("scenario: greedy pair order must be a permutation");
            seen_pair[j] = 1;
        }
    }
    validate_policy(policy);
}

void ScenarioConfig::validate_policy(Policy p) const {
    const int n_sats = constellation.size();
    if (p == Policy::kHungarian) {
        if (caps.transmitter != 1 || caps.pair != 1)
            throw std::invalid_argument("policy hungarian: requires T_i = 1 and L_j = 1");
        // Uniform receiver caps are non-binding iff they cover the smaller of
        // the transmitter supply and the per-station pair demand.
        int max_demand = 0;
        for (int g = 0; g < static_cast<int>(stations.size()); ++g) {
            int demand = 0;
            for (const auto& pr : pairs)
                if (pr.first == g || pr.second == g) demand += caps.pair;
            max_demand = std::max(max_demand, std::min(n_sats, demand));
        }
        if (caps.receiver < max_demand)
            throw std::invalid_argument(
                "policy hungarian: receiver caps bind; use policy exact");
    } else if (p == Policy::kMwisGreedy) {
        if (caps.receiver != 1 || caps.transmitter != 1 || caps.pair != 1)
            throw std::invalid_argument("policy mwis_greedy: requires R_g = T_i = L_j = 1");
    }
}

bool reports_equal(const SimulationReport& a, const SimulationReport& b) {
    if (a.policy != b.policy || a.slot_s != b.slot_s || a.num_slots != b.num_slots ||
        a.grand_total != b.grand_total || a.pair_totals != b.pair_totals ||
        a.slots.size() != b.slots.size())
        return false;
    for (size_t t = 0; t < a.slots.size(); ++t) {
        const SlotRecord& ra = a.slots[t];
        const SlotRecord& rb = b.slots[t];
        if (ra.slot != rb.slot || ra.objective != rb.objective || ra.count != rb.count ||
            ra.links.size() != rb.links.size())
            return false;
        for (size_t k = 0; k < ra.links.size(); ++k) {
            const AssignedLink& la = ra.links[k];
            const AssignedLink& lb = rb.links[k];
            if (la.sat != lb.sat || la.pair != lb.pair || la.psi_hz != lb.psi_hz ||
                la.chi != lb.chi || la.count != lb.count)
                return false;
        }
    }
    return true;
}

ProblemInputs compute_slot_inputs(const ScenarioConfig& scenario,
                                  const LinkMetricsEvaluator& evaluator, int slot) {
    const int n_sats = scenario.constellation.size();
    const int n_stations = static_cast<int>(scenario.stations.size());
    const int n_pairs = static_cast<int>(scenario.pairs.size());

    std::vector<Vec3> sat_pos(n_sats);
    for (int ring = 0; ring < scenario.constellation.num_rings; ++ring)
        for (int phase = 0; phase < scenario.constellation.sats_per_ring; ++phase)
            sat_pos[ring * scenario.constellation.sats_per_ring + phase] =
                satellite_position(scenario.constellation, ring, phase, slot, scenario.time);

    std::vector<Vec3> gs_pos(n_stations);
    for (int g = 0; g < n_stations; ++g)
        gs_pos[g] = ground_station_position(scenario.stations[g], slot, scenario.time);

    std::vector<LinkGeometry> geometry(static_cast<size_t>(n_sats) * n_stations);
    for (int i = 0; i < n_sats; ++i)
        for (int g = 0; g < n_stations; ++g)
            geometry[i * n_stations + g] = link_geometry(
                sat_pos[i], gs_pos[g], scenario.constellation, scenario.atmosphere_thickness_m);

    ProblemInputs inputs;
    inputs.num_sats = n_sats;
    inputs.num_stations = n_stations;
    inputs.pairs.reserve(n_pairs);
    for (const auto& p : scenario.pairs) inputs.pairs.push_back({p.first, p.second});
    inputs.links.resize(static_cast<size_t>(n_sats) * n_pairs);

    for (int i = 0; i < n_sats; ++i) {
        for (int j = 0; j < n_pairs; ++j) {
            const LinkGeometry& arm1 = geometry[i * n_stations + scenario.pairs[j].first];
            const LinkGeometry& arm2 = geometry[i * n_stations + scenario.pairs[j].second];
            if (!arm1.visible || !arm2.visible) continue;
            CandidateLink link;
            link.metrics = evaluator.link(scenario.optics, arm1, arm2);
            link.elevation1_rad = arm1.elevation_rad;
            link.elevation2_rad = arm2.elevation_rad;
            inputs.links[inputs.cell(i, j)] = link;
        }
    }
    return inputs;
}

namespace {

Assignment solve_with_policy(const AssignmentProblem& problem, Policy policy,
                             const ScenarioConfig& scenario) {
    switch (policy) {
        case Policy::kExact: return solve_exact(problem);
        case Policy::kHungarian: return solve_hungarian(problem);
        case Policy::kMwisGreedy: {
            const ConflictGraph graph = build_conflict_graph(problem);
            return assignment_from_mwis(problem, graph, solve_mwis_greedy(graph));
        }
        case Policy::kGreedyBaseline:
            return solve_greedy_baseline(
                problem, scenario.greedy_pair_order.empty() ? nullptr
                                                            : &scenario.greedy_pair_order);
    }
    throw std::logic_error("unreachable policy");
}

// Distinct, reproducible stream per (seed, policy, slot).
uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

SlotRecord make_record(const ScenarioConfig& scenario, const ProblemInputs& inputs,
                       const Assignment& assignment, Policy policy, int slot) {
    SlotRecord record;
    record.slot = slot;
    record.objective = assignment.objective;

    std::mt19937_64 rng(splitmix64(scenario.seed ^ splitmix64(
                            (static_cast<uint64_t>(slot) << 8) + static_cast<int>(policy))));
    for (const auto& [i, j] : assignment.chosen) {
        const CandidateLink& link = *inputs.links[inputs.cell(i, j)];
        AssignedLink out;
        out.sat = i;
        out.pair = j;
        out.psi_hz = link.metrics.rate_hz;
        out.chi = link.metrics.fidelity;
        const double expected = link.metrics.rate_hz * scenario.time.slot_s;
        if (scenario.count_mode == CountMode::kExpected) {
            out.count = expected;
        } else {
            std::poisson_distribution<long long> poisson(expected);
            out.count = static_cast<double>(poisson(rng));
        }
        record.count += out.count;
        record.links.push_back(out);
    }
    return record;
}

void parallel_slots(int num_slots, int threads, const std::function<void(int)>& body) {
    if (threads <= 1 || num_slots <= 1) {
        for (int t = 1; t <= num_slots; ++t) body(t);
        return;
    }
    std::atomic<int> next{1};
    auto worker = [&]() {
        for (;;) {
            const int t = next.fetch_add(1);
            if (t > num_slots) return;
            body(t);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace

std::vector<SimulationReport> compare_policies(const ScenarioConfig& scenario,
                                               const std::vector<Policy>& policies) {
    scenario.validate();
    for (Policy p : policies) scenario.validate_policy(p);

    const auto start = std::chrono::steady_clock::now();
    const LinkMetricsEvaluator evaluator(scenario.source);
    const int num_slots = scenario.time.num_slots;
    const int num_policies = static_cast<int>(policies.size());

    std::vector<std::vector<SlotRecord>> records(num_policies);
    for (auto& r : records) r.resize(num_slots);

    int threads = scenario.num_threads > 0
                      ? scenario.num_threads
                      : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, num_slots));

    parallel_slots(num_slots, threads, [&](int slot) {
        const ProblemInputs inputs = compute_slot_inputs(scenario, evaluator, slot);
        const AssignmentProblem problem =
            build_problem(inputs, scenario.weight_mode, scenario.caps,
                          scenario.fidelity_threshold, scenario.elevation_limit_rad,
                          scenario.weight_mode == WeightMode::kRequestRate
                              ? &scenario.request_rates
                              : nullptr);
        for (int p = 0; p < num_policies; ++p) {
            const Assignment assignment = solve_with_policy(problem, policies[p], scenario);
            records[p][slot - 1] = make_record(scenario, inputs, assignment, policies[p], slot);
        }
    });

    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::vector<SimulationReport> reports(num_policies);
    for (int p = 0; p < num_policies; ++p) {
        SimulationReport& report = reports[p];
        report.policy = policy_name(policies[p]);
        report.slot_s = scenario.time.slot_s;
        report.num_slots = num_slots;
        report.slots = std::move(records[p]);
        report.pair_totals.assign(scenario.pairs.size(), 0.0);
        for (const SlotRecord& record : report.slots) {
            for (const AssignedLink& link : record.links)
                report.pair_totals[link.pair] += link.count;
            report.grand_total += record.count;
        }
        report.wall = {elapsed, threads};
    }
    return reports;
}

SimulationReport run_simulation(const ScenarioConfig& scenario) {
    return compare_policies(scenario, {scenario.policy}).front();
}

std::vector<SweepRow> altitude_sweep(const ScenarioConfig& scenario,
                                     const std::vector<double>& altitudes_m,
                                     const std::vector<Policy>& policies) {
    if (altitudes_m.empty())
        throw std::invalid_argument("altitude_sweep: needs at least one altitude");
    for (double a : altitudes_m)
        if (!(a > 0.0)) throw std::invalid_argument("altitude_sweep: altitudes must be > 0");

    std::vector<Policy> all = {Policy::kExact};
    for (Policy p : policies)
        if (p != Policy::kExact) all.push_back(p);

    std::vector<SweepRow> rows;
    for (double altitude : altitudes_m) {
        ScenarioConfig modified = scenario;
        modified.constellation.altitude_m = altitude;
        const std::vector<SimulationReport> reports = compare_policies(modified, all);
        const double exact_total = reports.front().grand_total;
        for (size_t p = 0; p < all.size(); ++p) {
            SweepRow row;
            row.altitude_m = altitude;
            row.policy = reports[p].policy;
            row.grand_total = reports[p].grand_total;
            row.gap_vs_exact =
                exact_total > 0.0 ? (exact_total - reports[p].grand_total) / exact_total : 0.0;
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace optsat
