#ifndef OPTSAT_CONFIG_JSON_HPP
#define OPTSAT_CONFIG_JSON_HPP

// JSON scenario ingestion. Physical quantities carry explicit unit suffixes
// in key names (altitude_m, wavelength_m, alpha_per_km) and are converted to
// SI at this boundary.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "optsat/simulation.hpp"

namespace optsat {

// Validation failure naming the offending JSON path (e.g.
// "constellation.altitude_m").
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::string path, const std::string& message)
        : std::runtime_error("config error at " + path + ": " + message),
          path_(std::move(path)) {}

    const std::string& path() const { return path_; }

  private:
    std::string path_;
};

ScenarioConfig scenario_from_json(const nlohmann::json& j);
ScenarioConfig load_scenario(const std::string& config_path);

// Canonical FNV-1a hash of the parsed config; stable under key reordering.
std::string config_hash(const nlohmann::json& j);

// Assignment-problem instances for the solve command.
AssignmentProblem instance_from_json(const nlohmann::json& j);
AssignmentProblem load_instance(const std::string& instance_path);
nlohmann::json instance_to_json(const AssignmentProblem& problem);

}  // namespace optsat

#endif  // OPTSAT_CONFIG_JSON_HPP
