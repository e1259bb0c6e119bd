#include "optsat/solvers.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace optsat {

namespace {

struct Candidate {
    int sat;
    int pair;
    double weight;
};

// Candidates with C = 1 and positive weight, sorted by descending weight
// (ties towards lower indices) so the next undecided candidate is always the
// heaviest one.
std::vector<Candidate> collect_candidates(const AssignmentProblem& problem) {
    std::vector<Candidate> c;
    for (int i = 0; i < problem.num_sats; ++i)
        for (int j = 0; j < problem.num_pairs(); ++j)
            if (problem.indicator(i, j) && problem.weight(i, j) > 0.0)
                c.push_back({i, j, problem.weight(i, j)});
    std::sort(c.begin(), c.end(), [](const Candidate& a, const Candidate& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        if (a.sat != b.sat) return a.sat < b.sat;
        return a.pair < b.pair;
    });
    return c;
}

struct Residuals {
    std::vector<int> rx;
    std::vector<int> tx;
    std::vector<int> conn;

    explicit Residuals(const AssignmentProblem& p)
        : rx(p.receiver_caps), tx(p.transmitter_caps), conn(p.pair_caps) {}

    bool admits(const AssignmentProblem& p, const Candidate& c) const {
        return tx[c.sat] > 0 && conn[c.pair] > 0 && rx[p.pairs[c.pair][0]] > 0 &&
               rx[p.pairs[c.pair][1]] > 0;
    }
    void take(const AssignmentProblem& p, const Candidate& c, int delta) {
        tx[c.sat] += delta;
        conn[c.pair] += delta;
        rx[p.pairs[c.pair][0]] += delta;
        rx[p.pairs[c.pair][1]] += delta;
    }
};

class BranchAndBound {
  public:
    explicit BranchAndBound(const AssignmentProblem& problem)
        : problem_(problem), candidates_(collect_candidates(problem)), residuals_(problem) {}

    Assignment run() {
        seed_incumbent();
        std::vector<int> chosen;
        explore(0, 0.0, chosen);
        Assignment out;
        out.chosen.reserve(best_set_.size());
        for (int k : best_set_) out.chosen.emplace_back(candidates_[k].sat, candidates_[k].pair);
        out.objective = canonical_objective(problem_, out.chosen);
        return out;
    }

  private:
    // Greedy over the weight-sorted candidates provides the initial incumbent.
    void seed_incumbent() {
        Residuals r(problem_);
        double value = 0.0;
        std::vector<int> set;
        for (int k = 0; k < static_cast<int>(candidates_.size()); ++k) {
            if (!r.admits(problem_, candidates_[k])) continue;
            r.take(problem_, candidates_[k], -1);
            value += candidates_[k].weight;
            set.push_back(k);
        }
        best_value_ = value;
        best_set_ = std::move(set);
    }

    double remaining_bound(int from) const {
        double bound = 0.0;
        for (int k = from; k < static_cast<int>(candidates_.size()); ++k)
            if (residuals_.admits(problem_, candidates_[k])) bound += candidates_[k].weight;
        return bound;
    }

    void explore(int k, double value, std::vector<int>& chosen) {
        if (value + remaining_bound(k) <= best_value_ && !best_set_.empty()) return;
        if (k == static_cast<int>(candidates_.size())) {
            if (value > best_value_ || best_set_.empty()) {
                best_value_ = value;
                best_set_ = chosen;
            }
            return;
        }
        const Candidate& c = candidates_[k];
        if (residuals_.admits(problem_, c)) {
            residuals_.take(problem_, c, -1);
            chosen.push_back(k);
            explore(k + 1, value + c.weight, chosen);
            chosen.pop_back();
            residuals_.take(problem_, c, +1);
        }
        explore(k + 1, value, chosen);
    }

    const AssignmentProblem& problem_;
    std::vector<Candidate> candidates_;
    Residuals residuals_;
    double best_value_ = 0.0;
    std::vector<int> best_set_;
};

}  // namespace

Assignment solve_exact(const AssignmentProblem& problem) {
    problem.validate();
    return BranchAndBound(problem).run();
}

namespace {

// Minimum-cost perfect assignment on a square cost matrix via the potentials
// method (Jonker-Volgenant style), O(n^3).
std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost) {
    const int n = static_cast<int>(cost.size());
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> match(n + 1, 0), way(n + 1, 0);

    for (int i = 1; i <= n; ++i) {
        match[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = match[j0];
            int j1 = -1;
            double delta = inf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const int j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<int> row_to_col(n, -1);
    for (int j = 1; j <= n; ++j)
        if (match[j] > 0) row_to_col[match[j] - 1] = j - 1;
    return row_to_col;
}

}  // namespace

Assignment solve_hungarian(const AssignmentProblem& problem) {
    problem.validate();
    auto all_one = [](const std::vector<int>& v) {
        return std::all_of(v.begin(), v.end(), [](int c) { return c == 1; });
    };
    if (!all_one(problem.transmitter_caps) || !all_one(problem.pair_caps) ||
        !problem.receiver_caps_nonbinding())
        throw std::invalid_argument(
            "solve_hungarian: needs T_i = 1, L_j = 1 and non-binding receiver caps; "
            "use solve_exact for general instances");

    const int n = std::max(problem.num_sats, problem.num_pairs());
    if (n == 0) return {};

    // Maximize by minimizing negated weights; padding rows/columns carry 0.
    std::vector<std::vector<double>> cost(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < problem.num_sats; ++i)
        for (int j = 0; j < problem.num_pairs(); ++j)
            if (problem.indicator(i, j)) cost[i][j] = -problem.weight(i, j);

    const std::vector<int> row_to_col = min_cost_assignment(cost);

    Assignment out;
    for (int i = 0; i < problem.num_sats; ++i) {
        const int j = row_to_col[i];
        if (j < 0 || j >= problem.num_pairs()) continue;
        if (problem.indicator(i, j) && problem.weight(i, j) > 0.0) out.chosen.emplace_back(i, j);
    }
    out.objective = canonical_objective(problem, out.chosen);
    return out;
}

Assignment solve_greedy_baseline(const AssignmentProblem& problem,
                                 const std::vector<int>* pair_order) {
    problem.validate();
    std::vector<int> order;
    if (pair_order != nullptr) {
        order = *pair_order;
        if (static_cast<int>(order.size()) != problem.num_pairs())
            throw std::invalid_argument("solve_greedy_baseline: bad pair order size");
    } else {
        order.resize(problem.num_pairs());
        for (int j = 0; j < problem.num_pairs(); ++j) order[j] = j;
    }

    Residuals residuals(problem);
    Assignment out;
    for (int j : order) {
        std::vector<uint8_t> taken(problem.num_sats, 0);
        while (residuals.conn[j] > 0) {
            int best_sat = -1;
            double best_weight = 0.0;
            for (int i = 0; i < problem.num_sats; ++i) {
                if (taken[i] || !problem.indicator(i, j)) continue;
                const double w = problem.weight(i, j);
                if (w <= 0.0) continue;
                if (!residuals.admits(problem, {i, j, w})) continue;
                if (w > best_weight) {
                    best_weight = w;
                    best_sat = i;
                }
            }
            if (best_sat < 0) break;
            taken[best_sat] = 1;
            residuals.take(problem, {best_sat, j, best_weight}, -1);
            out.chosen.emplace_back(best_sat, j);
        }
    }
    out.objective = canonical_objective(problem, out.chosen);
    return out;
}

ExpandedProblem expand_copies(const AssignmentProblem& problem) {
    problem.validate();
    if (!problem.receiver_caps_nonbinding())
        throw std::invalid_argument("expand_copies: receiver caps must be non-binding");

    ExpandedProblem out;
    for (int i = 0; i < problem.num_sats; ++i)
        for (int c = 0; c < problem.transmitter_caps[i]; ++c) out.sat_origin.push_back(i);
    for (int j = 0; j < problem.num_pairs(); ++j)
        for (int c = 0; c < problem.pair_caps[j]; ++c) out.pair_origin.push_back(j);

    AssignmentProblem& p = out.problem;
    p.num_sats = static_cast<int>(out.sat_origin.size());
    p.num_stations = problem.num_stations;
    p.pairs.reserve(out.pair_origin.size());
    for (int col : out.pair_origin) p.pairs.push_back(problem.pairs[col]);
    p.transmitter_caps.assign(p.num_sats, 1);
    p.pair_caps.assign(out.pair_origin.size(), 1);
    p.receiver_caps.assign(problem.num_stations, std::max(1, p.num_sats));

    p.weights.assign(static_cast<size_t>(p.num_sats) * p.num_pairs(), 0.0);
    p.indicators.assign(static_cast<size_t>(p.num_sats) * p.num_pairs(), 0);
    for (int r = 0; r < p.num_sats; ++r) {
        for (int c = 0; c < p.num_pairs(); ++c) {
            const int i = out.sat_origin[r];
            const int j = out.pair_origin[c];
            p.weights[p.cell(r, c)] = problem.weight(i, j);
            p.indicators[p.cell(r, c)] = problem.indicators[problem.cell(i, j)];
        }
    }
    return out;
}

Assignment solve_exhaustive(const AssignmentProblem& problem) {
    problem.validate();
    if (problem.num_sats * problem.num_pairs() > 36)
        throw std::invalid_argument(
            "solve_exhaustive: refusing instances with more than 36 cells");

    std::vector<Candidate> cells;
    for (int i = 0; i < problem.num_sats; ++i)
        for (int j = 0; j < problem.num_pairs(); ++j)
            if (problem.indicator(i, j) && problem.weight(i, j) > 0.0)
                cells.push_back({i, j, problem.weight(i, j)});

    Residuals residuals(problem);
    std::vector<int> chosen;
    std::vector<int> best_set;
    double best_value = 0.0;

    // In/out recursion over the cells in row-major order.
    auto recurse = [&](auto&& self, int k, double value) -> void {
        if (k == static_cast<int>(cells.size())) {
            if (value > best_value) {
                best_value = value;
                best_set = chosen;
            }
            return;
        }
        if (residuals.admits(problem, cells[k])) {
            residuals.take(problem, cells[k], -1);
            chosen.push_back(k);
            self(self, k + 1, value + cells[k].weight);
            chosen.pop_back();
            residuals.take(problem, cells[k], +1);
        }
        self(self, k + 1, value);
    };
    recurse(recurse, 0, 0.0);

    Assignment out;
    out.chosen.reserve(best_set.size());
    for (int k : best_set) out.chosen.emplace_back(cells[k].sat, cells[k].pair);
    out.objective = canonical_objective(problem, out.chosen);
    return out;
}

std::vector<std::pair<int, int>> collapse_expanded(const ExpandedProblem& expanded,
                                                   const Assignment& assignment) {
    std::vector<std::pair<int, int>> mapped;
    mapped.reserve(assignment.chosen.size());
    for (const auto& [r, c] : assignment.chosen)
        mapped.emplace_back(expanded.sat_origin[r], expanded.pair_origin[c]);
    std::sort(mapped.begin(), mapped.end());
    return mapped;
}

}  // namespace optsat
