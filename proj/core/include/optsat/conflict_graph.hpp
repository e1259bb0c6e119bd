#ifndef OPTSAT_CONFLICT_GRAPH_HPP
#define OPTSAT_CONFLICT_GRAPH_HPP

// Conflict-graph reduction for the all-caps-one case: vertices are feasible
// (satellite, pair) candidates, edges join candidates sharing a satellite or
// a ground station, and feasible assignments are exactly the independent
// sets. Solved by the weighted-degree greedy heuristic with the
// 1/(gamma_bar + 1) guarantee.

#include <vector>

#include "optsat/problem.hpp"

namespace optsat {

struct ConflictVertex {
    int sat = 0;
    int pair = 0;
    double weight = 0.0;
};

struct ConflictGraph {
    std::vector<ConflictVertex> vertices;
    std::vector<std::vector<int>> adjacency;

    int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
};

struct MwisResult {
    std::vector<int> vertices;  // independent set, ascending
    double total_weight = 0.0;
    // Weighted average degree of the original graph,
    // gamma_bar = sum w_v * deg_v / sum w_v (0 for an all-zero-weight graph).
    double weighted_avg_degree = 0.0;
    double ratio_bound = 1.0;  // 1 / (gamma_bar + 1)
};

// Requires R_g = T_i = L_j = 1; throws std::invalid_argument otherwise.
ConflictGraph build_conflict_graph(const AssignmentProblem& problem);

// Repeatedly picks the vertex minimizing gamma_v = sum of alive neighbor
// weights / w_v (zero-weight vertices get gamma = +inf and are picked last;
// ties go to the lowest vertex index), removes it and its neighbors.
MwisResult solve_mwis_greedy(const ConflictGraph& graph);

Assignment assignment_from_mwis(const AssignmentProblem& problem, const ConflictGraph& graph,
                                const MwisResult& result);

}  // namespace optsat

#endif  // OPTSAT_CONFLICT_GRAPH_HPP
