#include "optsat/commands.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>

#include "optsat/config_json.hpp"
#include "optsat/report_io.hpp"
#include "optsat/version.hpp"

namespace optsat {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("<file>", "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("<file>", std::string("JSON parse failure: ") + e.what());
    }
    return j;
}

Assignment run_solver(const std::string& solver, const AssignmentProblem& problem) {
    if (solver == "exact") return solve_exact(problem);
    if (solver == "hungarian") return solve_hungarian(problem);
    if (solver == "greedy" || solver == "greedy_baseline") return solve_greedy_baseline(problem);
    if (solver == "mwis_greedy") {
        const ConflictGraph graph = build_conflict_graph(problem);
        return assignment_from_mwis(problem, graph, solve_mwis_greedy(graph));
    }
    throw std::invalid_argument("unknown solver '" + solver + "'");
}

}  // namespace

int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err) {
    RunManifest manifest;
    manifest.tool_version = kVersion;
    manifest.started_at = iso8601_utc_now();
    try {
        const json raw = read_json_file(options.config_path);
        ScenarioConfig scenario = scenario_from_json(raw);
        if (!options.policy_override.empty()) {
            scenario.policy = policy_from_name(options.policy_override);
            scenario.validate_policy(scenario.policy);
        }
        manifest.config_hash = config_hash(raw);

        const SimulationReport report = run_simulation(scenario);

        fs::create_directories(options.output_dir);
        const fs::path dir(options.output_dir);
        const std::string report_path = (dir / "report.json").string();
        const std::string slots_path = (dir / "slots.csv").string();
        const std::string pairs_path = (dir / "pairs.csv").string();
        const std::string manifest_path = (dir / "manifest.json").string();

        write_file(report_path, report_to_json(report).dump(2) + "\n");
        write_file(slots_path, slots_csv(report));
        write_file(pairs_path, pairs_csv(report, scenario));

        manifest.outputs = {report_path, slots_path, pairs_path};
        manifest.finished_at = iso8601_utc_now();
        write_file(manifest_path, manifest_to_json(manifest).dump(2) + "\n");

        out << "policy " << report.policy << ": grand total " << format_double(report.grand_total)
            << " ebits over " << report.num_slots << " slots ("
            << format_double(report.wall.elapsed_s) << " s, " << report.wall.threads
            << " threads)\n";
        out << "wrote " << report_path << ", " << slots_path << ", " << pairs_path << ", "
            << manifest_path << "\n";
        return kExitOk;
    } catch (const ConfigError& e) {
        err << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "runtime failure: " << e.what() << "\n";
        return kExitRuntime;
    }
}

int cmd_sweep(const SweepOptions& options, std::ostream& out, std::ostream& err) {
    try {
        if (options.altitudes_km.empty())
            throw ConfigError("<args>", "sweep needs at least one altitude");
        const json raw = read_json_file(options.config_path);
        const ScenarioConfig scenario = scenario_from_json(raw);

        std::vector<Policy> policies;
        if (options.policies.empty()) {
            policies.push_back(scenario.policy);
        } else {
            for (const std::string& name : options.policies)
                policies.push_back(policy_from_name(name));
        }
        for (Policy p : policies) scenario.validate_policy(p);

        std::vector<double> altitudes_m;
        altitudes_m.reserve(options.altitudes_km.size());
        for (double km : options.altitudes_km) altitudes_m.push_back(km * 1e3);

        const std::vector<SweepRow> rows = altitude_sweep(scenario, altitudes_m, policies);

        fs::create_directories(options.output_dir);
        const std::string sweep_path =
            (fs::path(options.output_dir) / "sweep.csv").string();
        write_file(sweep_path, sweep_csv(rows));

        for (const SweepRow& row : rows)
            out << format_double(row.altitude_m / 1e3) << " km  " << row.policy << "  total "
                << format_double(row.grand_total) << "  gap " << format_double(row.gap_vs_exact)
                << "\n";
        out << "wrote " << sweep_path << "\n";
        return kExitOk;
    } catch (const ConfigError& e) {
        err << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "runtime failure: " << e.what() << "\n";
        return kExitRuntime;
    }
}

int cmd_solve(const SolveOptions& options, std::ostream& out, std::ostream& err) {
    try {
        const AssignmentProblem problem = load_instance(options.instance_path);
        const Assignment solution = run_solver(options.solver, problem);

        nlohmann::ordered_json j;
        j["solver"] = options.solver;
        j["objective"] = solution.objective;
        nlohmann::ordered_json chosen = nlohmann::ordered_json::array();
        for (const auto& [i, jj] : solution.chosen) chosen.push_back({i, jj});
        j["assignment"] = std::move(chosen);
        j["feasible"] = is_feasible(problem, solution);

        if (options.check) {
            const Assignment oracle = solve_exhaustive(problem);
            j["oracle_objective"] = oracle.objective;
            j["suboptimality_gap"] = oracle.objective - solution.objective;
        }
        out << j.dump(2) << "\n";
        return kExitOk;
    } catch (const ConfigError& e) {
        err << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "runtime failure: " << e.what() << "\n";
        return kExitRuntime;
    }
}

}  // namespace optsat
