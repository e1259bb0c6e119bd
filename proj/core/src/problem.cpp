#include "optsat/problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace optsat {

bool AssignmentProblem::caps_all_one() const {
    auto all_one = [](const std::vector<int>& v) {
        return std::all_of(v.begin(), v.end(), [](int c) { return c == 1; });
    };
    return all_one(receiver_caps) && all_one(transmitter_caps) && all_one(pair_caps);
}

bool AssignmentProblem::receiver_caps_nonbinding() const {
    int total_tx = 0;
    for (int t : transmitter_caps) total_tx += t;
    for (int g = 0; g < num_stations; ++g) {
        int demand = 0;
        for (int j = 0; j < num_pairs(); ++j)
            if (pairs[j][0] == g || pairs[j][1] == g) demand += pair_caps[j];
        if (receiver_caps[g] < std::min(total_tx, demand)) return false;
    }
    return true;
}

void AssignmentProblem::validate() const {
    const int m = num_pairs();
    if (num_sats < 0 || num_stations < 0) throw std::invalid_argument("problem: negative sizes");
    if (static_cast<int>(weights.size()) != num_sats * m ||
        static_cast<int>(indicators.size()) != num_sats * m)
        throw std::invalid_argument("problem: weight/indicator size mismatch");
    if (static_cast<int>(receiver_caps.size()) != num_stations ||
        static_cast<int>(transmitter_caps.size()) != num_sats ||
        static_cast<int>(pair_caps.size()) != m)
        throw std::invalid_argument("problem: cap vector size mismatch");

    for (int c : receiver_caps)
        if (c < 0) throw std::invalid_argument("problem: receiver cap < 0");
    for (int c : transmitter_caps)
        if (c < 0) throw std::invalid_argument("problem: transmitter cap < 0");
    for (int c : pair_caps)
        if (c < 0) throw std::invalid_argument("problem: pair cap < 0");
    for (double w : weights)
        if (!std::isfinite(w) || w < 0.0)
            throw std::invalid_argument("problem: weights must be finite and >= 0");

    for (int j = 0; j < m; ++j) {
        const auto& p = pairs[j];
        if (p[0] < 0 || p[0] >= num_stations || p[1] < 0 || p[1] >= num_stations)
            throw std::invalid_argument("problem: pair references unknown station");
        if (p[0] == p[1]) throw std::invalid_argument("problem: pair stations must differ");
        for (int g : p)
            if (receiver_caps[g] < pair_caps[j])
                throw std::invalid_argument("problem: requires R_g >= L_j for member stations");
    }
}

double canonical_objective(const AssignmentProblem& problem,
                           std::vector<std::pair<int, int>>& chosen) {
    std::sort(chosen.begin(), chosen.end());
    double obj = 0.0;
    for (const auto& [i, j] : chosen)
        if (problem.indicator(i, j)) obj += problem.weight(i, j);
    return obj;
}

bool is_feasible(const AssignmentProblem& problem, const Assignment& assignment) {
    std::vector<int> rx(problem.num_stations, 0);
    std::vector<int> tx(problem.num_sats, 0);
    std::vector<int> conn(problem.num_pairs(), 0);
    std::vector<uint8_t> used(problem.weights.size(), 0);

    for (const auto& [i, j] : assignment.chosen) {
        if (i < 0 || i >= problem.num_sats || j < 0 || j >= problem.num_pairs()) return false;
        if (used[problem.cell(i, j)]) return false;  // x_ij binary
        used[problem.cell(i, j)] = 1;
        if (!problem.indicator(i, j)) return false;
        ++tx[i];
        ++conn[j];
        ++rx[problem.pairs[j][0]];
        ++rx[problem.pairs[j][1]];
    }
    for (int i = 0; i < problem.num_sats; ++i)
        if (tx[i] > problem.transmitter_caps[i]) return false;
    for (int j = 0; j < problem.num_pairs(); ++j)
        if (conn[j] > problem.pair_caps[j]) return false;
    for (int g = 0; g < problem.num_stations; ++g)
        if (rx[g] > problem.receiver_caps[g]) return false;
    return true;
}

bool build_indicator(const IndicatorInputs& inputs) {
    if (!(inputs.fidelity_threshold >= 0.0 && inputs.fidelity_threshold <= 1.0))
        throw std::invalid_argument("indicator: fidelity threshold outside [0, 1]");
    if (!(inputs.elevation_limit_rad >= 0.0 && inputs.elevation_limit_rad < kPi / 2.0))
        throw std::invalid_argument("indicator: elevation limit outside [0, pi/2)");
    return inputs.fidelity >= inputs.fidelity_threshold &&
           inputs.elevation1_rad >= inputs.elevation_limit_rad &&
           inputs.elevation2_rad >= inputs.elevation_limit_rad;
}

AssignmentProblem build_problem(const ProblemInputs& inputs, WeightMode mode,
                                const CapsConfig& caps, double fidelity_threshold,
                                double elevation_limit_rad,
                                const std::vector<double>* request_rates) {
    const int m = static_cast<int>(inputs.pairs.size());
    if (mode == WeightMode::kRequestRate &&
        (request_rates == nullptr || static_cast<int>(request_rates->size()) != m))
        throw std::invalid_argument("build_problem: request-rate mode needs a per-pair rate table");

    AssignmentProblem problem;
    problem.num_sats = inputs.num_sats;
    problem.num_stations = inputs.num_stations;
    problem.pairs = inputs.pairs;
    problem.weights.assign(static_cast<size_t>(inputs.num_sats) * m, 0.0);
    problem.indicators.assign(static_cast<size_t>(inputs.num_sats) * m, 0);
    problem.receiver_caps.assign(inputs.num_stations, caps.receiver);
    problem.transmitter_caps.assign(inputs.num_sats, caps.transmitter);
    problem.pair_caps.assign(m, caps.pair);

    for (int i = 0; i < inputs.num_sats; ++i) {
        for (int j = 0; j < m; ++j) {
            const auto& link = inputs.links[inputs.cell(i, j)];
            if (!link.has_value()) continue;
            const bool covered = build_indicator({link->metrics.fidelity, fidelity_threshold,
                                                  link->elevation1_rad, link->elevation2_rad,
                                                  elevation_limit_rad});
            if (!covered) continue;
            problem.indicators[problem.cell(i, j)] = 1;
            problem.weights[problem.cell(i, j)] =
                mode == WeightMode::kRate ? link->metrics.rate_hz : (*request_rates)[j];
        }
    }
    problem.validate();
    return problem;
}

}  // namespace optsat
