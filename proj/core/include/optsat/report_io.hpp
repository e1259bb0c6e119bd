#ifndef OPTSAT_REPORT_IO_HPP
#define OPTSAT_REPORT_IO_HPP

// Report persistence: report.json (round-trippable), slots.csv / pairs.csv /
// sweep.csv (fixed column schemas, header row always present), and the run
// manifest. Doubles are written in shortest round-trip form, so identical
// reports serialize byte-identically.

#include <string>
#include <vector>

#include <json.hpp>

#include "optsat/simulation.hpp"

namespace optsat {

// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

nlohmann::ordered_json report_to_json(const SimulationReport& report);
SimulationReport report_from_json(const nlohmann::ordered_json& j);

// Columns: t, policy, sat_id, pair_id, psi_hz, chi, count
std::string slots_csv(const SimulationReport& report);
// Columns: pair_id, station_a, station_b, total
std::string pairs_csv(const SimulationReport& report, const ScenarioConfig& scenario);
// Columns: altitude_m, policy, grand_total, gap_vs_exact
std::string sweep_csv(const std::vector<SweepRow>& rows);

struct RunManifest {
    std::string config_hash;
    std::string tool_version;
    std::string started_at;
    std::string finished_at;
    std::vector<std::string> outputs;
};

nlohmann::ordered_json manifest_to_json(const RunManifest& manifest);
std::string iso8601_utc_now();

void write_file(const std::string& path, const std::string& contents);

}  // namespace optsat

#endif  // OPTSAT_REPORT_IO_HPP
