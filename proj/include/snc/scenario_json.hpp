#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "snc/scenario.hpp"

namespace snc {

struct SimSettings {
  std::int64_t horizon = 100000;
  std::int64_t replications = 100;
  std::uint64_t seed = 1;
  std::int64_t warmup = -1;  // default 10% of horizon
};

// JSON scenario document: arrival model, ordered service models, optional
// simulation settings. Unknown keys are rejected.
struct ScenarioFile {
  TandemScenario scenario;
  SimSettings sim;
  bool has_sim = false;
};

ScenarioFile parse_scenario_json(const std::string& text);
ScenarioFile load_scenario_file(const std::filesystem::path& path);
std::string scenario_to_json(const ScenarioFile& file);

}  // namespace snc
