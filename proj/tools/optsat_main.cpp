// optsat command-line interface: run a scenario, sweep altitudes, or solve a
// standalone assignment instance.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "optsat/commands.hpp"
#include "optsat/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"optsat - satellite quantum-network scheduling simulator"};
    app.set_version_flag("--version", std::string(optsat::kVersion));
    app.require_subcommand(1);

    optsat::RunOptions run_options;
    CLI::App* run = app.add_subcommand("run", "Simulate a scenario and write reports");
    run->add_option("config", run_options.config_path, "Scenario config (JSON)")->required();
    run->add_option("-o,--out", run_options.output_dir, "Output directory")->default_val("out");
    run->add_option("--policy", run_options.policy_override,
                    "Override the config policy (exact|hungarian|mwis_greedy|greedy_baseline)");

    optsat::SweepOptions sweep_options;
    CLI::App* sweep = app.add_subcommand("sweep", "Altitude sweep with per-policy totals");
    sweep->add_option("config", sweep_options.config_path, "Scenario config (JSON)")->required();
    sweep->add_option("-o,--out", sweep_options.output_dir, "Output directory")->default_val("out");
    sweep->add_option("-a,--altitudes-km", sweep_options.altitudes_km,
                      "Altitudes in km (repeat or comma-separate)")
        ->required()
        ->delimiter(',');
    sweep->add_option("--policies", sweep_options.policies,
                      "Policies compared against exact (default: config policy)")
        ->delimiter(',');

    optsat::SolveOptions solve_options;
    CLI::App* solve = app.add_subcommand("solve", "Solve one assignment instance");
    solve->add_option("instance", solve_options.instance_path, "Instance file (JSON)")->required();
    solve->add_option("-s,--solver", solve_options.solver,
                      "exact|hungarian|greedy|mwis_greedy")
        ->default_val("exact");
    solve->add_flag("--check", solve_options.check,
                    "Cross-validate against the exhaustive oracle (<= 36 cells)");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) return optsat::cmd_run(run_options, std::cout, std::cerr);
    if (sweep->parsed()) return optsat::cmd_sweep(sweep_options, std::cout, std::cerr);
    if (solve->parsed()) return optsat::cmd_solve(solve_options, std::cout, std::cerr);
    return optsat::kExitConfig;
}
