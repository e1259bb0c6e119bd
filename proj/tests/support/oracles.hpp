#ifndef OPTSAT_TESTS_ORACLES_HPP
#define OPTSAT_TESTS_ORACLES_HPP

// Brute-force reference implementations used only by tests. Each oracle is
// written independently of the library path it checks: plain enumeration
// over assignments, permutations, vertex subsets, and photon-loss /
// dark-click outcomes.

#include <cstdint>
#include <random>
#include <vector>

#include "optsat/conflict_graph.hpp"
#include "optsat/problem.hpp"

namespace optsat::testing {

struct OracleSolution {
    double objective = 0.0;
    std::vector<std::pair<int, int>> chosen;  // canonical ascending order
};

// Enumerates every feasible binary assignment (row-major cell order,
// include/exclude recursion with feasibility checks inline).
OracleSolution enumerate_assignments(const AssignmentProblem& problem);

// Maximum-weight perfect-permutation value on an n x n effective weight
// matrix (w * C); with non-negative weights this equals the maximum-weight
// matching value. Requires n <= 8.
double enumerate_matching(const AssignmentProblem& problem);

// Maximum-weight independent set by subset enumeration (<= 20 vertices).
double enumerate_mwis(const ConflictGraph& graph);

// Success probability and post-selected Bell fidelity by exhaustive
// enumeration of source bra/ket pairs, per-mode photon-loss outcomes, and
// detector dark-click outcomes.
struct ChannelOutcome {
    double success_probability = 0.0;
    double fidelity = 0.0;
};
ChannelOutcome enumerate_channel(double mean_photon_number, double eta1, double eta2,
                                 double dark_click_probability, int bell_sign);

// Seeded random instances for the solver acceptance criteria.
AssignmentProblem random_problem(std::mt19937_64& rng, int max_sats, int max_pairs, int max_cap);
AssignmentProblem random_matching_problem(std::mt19937_64& rng, int size);
ConflictGraph random_conflict_graph(std::mt19937_64& rng, int max_vertices);

}  // namespace optsat::testing

#endif  // OPTSAT_TESTS_ORACLES_HPP
