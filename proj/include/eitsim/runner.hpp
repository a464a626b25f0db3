#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "eitsim/runconfig.hpp"

namespace eitsim {

struct ScenarioInfo {
    std::string name;
    std::string figure;
    std::string summary;
};

const std::vector<ScenarioInfo>& list_scenarios();
std::string scenarios_table();
nlohmann::json scenarios_json();

struct RunReport {
    int exit_code = 0;  // 0 ok, 2 if any sweep row failed
    std::vector<std::string> files;
    int failed_rows = 0;
};

// Executes a scenario (preset or custom) and writes CSV artifacts, each with
// a companion <csv>.manifest.json. Throws std::invalid_argument on config
// errors (CLI maps that to exit code 1).
RunReport run(const RunConfig& config);

}  // namespace eitsim
