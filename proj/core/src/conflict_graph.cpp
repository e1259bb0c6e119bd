#include "optsat/conflict_graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace optsat {

ConflictGraph build_conflict_graph(const AssignmentProblem& problem) {
    problem.validate();
    if (!problem.caps_all_one())
        throw std::invalid_argument("build_conflict_graph: requires R_g = T_i = L_j = 1");

    ConflictGraph graph;
    for (int i = 0; i < problem.num_sats; ++i)
        for (int j = 0; j < problem.num_pairs(); ++j)
            if (problem.indicator(i, j))
                graph.vertices.push_back({i, j, problem.weight(i, j)});

    const int n = static_cast<int>(graph.vertices.size());
    graph.adjacency.resize(n);
    for (int a = 0; a < n; ++a) {
        const auto& va = graph.vertices[a];
        const auto& pa = problem.pairs[va.pair];
        for (int b = a + 1; b < n; ++b) {
            const auto& vb = graph.vertices[b];
            const auto& pb = problem.pairs[vb.pair];
            const bool same_sat = va.sat == vb.sat;
            const bool share_station = pa[0] == pb[0] || pa[0] == pb[1] || pa[1] == pb[0] ||
                                       pa[1] == pb[1];
            if (same_sat || share_station) {
                graph.adjacency[a].push_back(b);
                graph.adjacency[b].push_back(a);
            }
        }
    }
    return graph;
}

MwisResult solve_mwis_greedy(const ConflictGraph& graph) {
    const int n = static_cast<int>(graph.vertices.size());
    MwisResult result;

    double weight_sum = 0.0;
    double weighted_degree_sum = 0.0;
    for (int v = 0; v < n; ++v) {
        weight_sum += graph.vertices[v].weight;
        weighted_degree_sum += graph.vertices[v].weight * graph.degree(v);
    }
    result.weighted_avg_degree = weight_sum > 0.0 ? weighted_degree_sum / weight_sum : 0.0;
    result.ratio_bound = 1.0 / (result.weighted_avg_degree + 1.0);

    std::vector<char> alive(n, 1);
    int alive_count = n;
    while (alive_count > 0) {
        int best = -1;
        double best_gamma = std::numeric_limits<double>::infinity();
        for (int v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            const double w = graph.vertices[v].weight;
            double gamma;
            if (w <= 0.0) {
                gamma = std::numeric_limits<double>::infinity();
            } else {
                double neighbor_weight = 0.0;
                for (int u : graph.adjacency[v])
                    if (alive[u]) neighbor_weight += graph.vertices[u].weight;
                gamma = neighbor_weight / w;
            }
            if (gamma < best_gamma || (best < 0 && gamma == best_gamma)) {
                best_gamma = gamma;
                best = v;
            }
        }
        result.vertices.push_back(best);
        result.total_weight += graph.vertices[best].weight;
        alive[best] = 0;
        --alive_count;
        for (int u : graph.adjacency[best]) {
            if (alive[u]) {
                alive[u] = 0;
                --alive_count;
            }
        }
    }
    std::sort(result.vertices.begin(), result.vertices.end());
    return result;
}

Assignment assignment_from_mwis(const AssignmentProblem& problem, const ConflictGraph& graph,
                                const MwisResult& result) {
    Assignment out;
    out.chosen.reserve(result.vertices.size());
    for (int v : result.vertices) {
        const auto& vert = graph.vertices[v];
        if (vert.weight > 0.0) out.chosen.emplace_back(vert.sat, vert.pair);
    }
    out.objective = canonical_objective(problem, out.chosen);
    return out;
}

}  // namespace optsat
