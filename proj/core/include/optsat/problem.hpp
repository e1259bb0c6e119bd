#ifndef OPTSAT_PROBLEM_HPP
#define OPTSAT_PROBLEM_HPP

// The per-slot assignment problem: maximize sum of w_ij * C_ij * x_ij over
// binary x subject to receiver caps R_g per station, transmitter caps T_i
// per satellite, and connection caps L_j per station pair.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "optsat/channel.hpp"

namespace optsat {

struct AssignmentProblem {
    int num_sats = 0;
    int num_stations = 0;
    std::vector<std::array<int, 2>> pairs;  // station indices per pair

    std::vector<double> weights;      // num_sats x num_pairs, row-major
    std::vector<uint8_t> indicators;  // same layout

    std::vector<int> receiver_caps;     // per station, R_g
    std::vector<int> transmitter_caps;  // per satellite, T_i
    std::vector<int> pair_caps;         // per pair, L_j

    int num_pairs() const { return static_cast<int>(pairs.size()); }
    int cell(int sat, int pair) const { return sat * num_pairs() + pair; }
    double weight(int sat, int pair) const { return weights[cell(sat, pair)]; }
    bool indicator(int sat, int pair) const { return indicators[cell(sat, pair)] != 0; }

    bool caps_all_one() const;
    // Receiver caps can never bind: R_g >= min(sum T_i, sum of L_j over pairs
    // containing g) for every station.
    bool receiver_caps_nonbinding() const;

    // Throws std::invalid_argument on violated invariants (sizes, negative
    // caps, non-finite weights, R_g < L_j for a member station).
    void validate() const;
};

struct Assignment {
    std::vector<std::pair<int, int>> chosen;  // (satellite, pair), sorted
    double objective = 0.0;
};

// Objective recomputed canonically (ascending (sat, pair) order) so equal
// selections compare bit-identically across solvers.
double canonical_objective(const AssignmentProblem& problem,
                           std::vector<std::pair<int, int>>& chosen);

// Verifies constraints (receiver, transmitter, pair caps), binarity, and
// that every chosen cell has C_ij = 1.
bool is_feasible(const AssignmentProblem& problem, const Assignment& assignment);

struct IndicatorInputs {
    double fidelity = 0.0;             // chi
    double fidelity_threshold = 0.0;   // F_th, in [0, 1]
    double elevation1_rad = 0.0;
    double elevation2_rad = 0.0;
    double elevation_limit_rad = 0.0;  // theta_e, in [0, pi/2)
};

// 1 iff chi >= F_th and both elevations >= theta_e (boundaries inclusive).
bool build_indicator(const IndicatorInputs& inputs);

enum class WeightMode { kRate, kRequestRate };

struct CandidateLink {
    LinkMetrics metrics;
    double elevation1_rad = 0.0;
    double elevation2_rad = 0.0;
};

// Per-slot inputs: metrics for every (satellite, pair) whose both arms are
// visible, nullopt otherwise.
struct ProblemInputs {
    int num_sats = 0;
    int num_stations = 0;
    std::vector<std::array<int, 2>> pairs;
    std::vector<std::optional<CandidateLink>> links;  // num_sats x num_pairs

    int cell(int sat, int pair) const { return sat * static_cast<int>(pairs.size()) + pair; }
};

struct CapsConfig {
    int receiver = 1;     // R_g, uniform
    int transmitter = 1;  // T_i, uniform
    int pair = 1;         // L_j, uniform
};

// Fills weights/indicators from the candidate links: invisible or
// sub-threshold links get C = 0 and are never selected. In request-rate mode
// the per-pair table must be provided.
AssignmentProblem build_problem(const ProblemInputs& inputs, WeightMode mode,
                                const CapsConfig& caps, double fidelity_threshold,
                                double elevation_limit_rad,
                                const std::vector<double>* request_rates = nullptr);

}  // namespace optsat

#endif  // OPTSAT_PROBLEM_HPP
