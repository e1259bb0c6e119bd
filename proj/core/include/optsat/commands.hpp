#ifndef OPTSAT_COMMANDS_HPP
#define OPTSAT_COMMANDS_HPP

// Command entry points shared by the CLI binary and the tests.
// Exit codes: 0 success, 2 config/validation error, 3 runtime failure.

#include <iosfwd>
#include <string>
#include <vector>

namespace optsat {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitRuntime = 3;

struct RunOptions {
    std::string config_path;
    std::string output_dir;
    std::string policy_override;  // empty = use config policy
};

// Writes report.json, slots.csv, pairs.csv, manifest.json into output_dir.
int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err);

struct SweepOptions {
    std::string config_path;
    std::string output_dir;
    std::vector<double> altitudes_km;
    // Policies compared against exact; empty = the config policy.
    std::vector<std::string> policies;
};

// Writes sweep.csv with one row per (altitude, policy).
int cmd_sweep(const SweepOptions& options, std::ostream& out, std::ostream& err);

struct SolveOptions {
    std::string instance_path;
    std::string solver = "exact";
    // Cross-validate against the exhaustive oracle (instances up to 36 cells).
    bool check = false;
};

int cmd_solve(const SolveOptions& options, std::ostream& out, std::ostream& err);

}  // namespace optsat

#endif  // OPTSAT_COMMANDS_HPP
