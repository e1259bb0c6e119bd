#ifndef OPTSAT_SOLVERS_HPP
#define OPTSAT_SOLVERS_HPP

// Solvers for the per-slot assignment problem: exact branch-and-bound, the
// Hungarian matching special case, the copy expansion for multi-transmitter
// instances, and the greedy baseline policy.

#include <vector>

#include "optsat/problem.hpp"

namespace optsat {

// Exact maximizer over binary x. Branches on the highest-weight undecided
// candidate; prunes with the additive bound that sums the remaining
// candidates admissible under the residual caps.
Assignment solve_exact(const AssignmentProblem& problem);

// Maximum-weight bipartite matching between satellites and pairs, O(n^3).
// Requires T_i = 1, L_j = 1 and non-binding receiver caps; throws
// std::invalid_argument directing the caller to solve_exact otherwise.
// Zero-weight edges are left unmatched.
Assignment solve_hungarian(const AssignmentProblem& problem);

// Greedy baseline: pairs visited in a fixed order (default: ascending pair
// id); each takes the highest-weight satellite with residual capacity until
// its cap is reached. Ties broken towards the lowest satellite id.
Assignment solve_greedy_baseline(const AssignmentProblem& problem,
                                 const std::vector<int>* pair_order = nullptr);

// Bipartite problem with T_i copies of each satellite and L_j copies of each
// pair, weights replicated and receiver caps fully slack. A matching on it
// may pick several copies of the same (satellite, pair) cell, representing
// parallel connections on that link.
struct ExpandedProblem {
    AssignmentProblem problem;
    std::vector<int> sat_origin;   // expanded row -> original satellite
    std::vector<int> pair_origin;  // expanded column -> original pair
};

// Requires non-binding receiver caps; throws std::invalid_argument otherwise.
ExpandedProblem expand_copies(const AssignmentProblem& problem);

// Maps an assignment on the expanded problem back to original indices.
// Entries may repeat when T_i, L_j > 1.
std::vector<std::pair<int, int>> collapse_expanded(const ExpandedProblem& expanded,
                                                   const Assignment& assignment);

// Plain feasibility-pruned enumeration over all binary x, no bounding.
// Backs the solve command's --check cross-validation; refuses instances with
// more than 36 cells.
Assignment solve_exhaustive(const AssignmentProblem& problem);

}  // namespace optsat

#endif  // OPTSAT_SOLVERS_HPP
