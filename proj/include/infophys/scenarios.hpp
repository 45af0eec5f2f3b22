// Scenario runner: named parameter sweeps over the library operations with
// deterministic seeding and ordered, reproducible output records.

#ifndef INFOPHYS_SCENARIOS_HPP
#define INFOPHYS_SCENARIOS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "infophys/classical.hpp"
#include "infophys/io.hpp"

namespace infophys::scenarios {

using classical::LogBase;

struct ScenarioConfig {
  std::string scenario;
  std::map<std::string, std::vector<double>> grid;  // cartesian product
  std::map<std::string, std::string> params;        // scalar string options
  std::uint64_t seed = 1;
  LogBase base = LogBase::Two;
  int workers = 1;
  bool timings = false;  // wall_time_ms column; off by default so reruns
                         // stay byte-identical
};

/// Parse a config JSON document ({"schema": 1, "scenario": ..., "grid": ...,
/// "params": ..., "seed": ..., "base": "2"|"e"|"10", "workers": ...}).
ScenarioConfig config_from_json(const nlohmann::json& j);

/// Names accepted by run_scenario.
std::vector<std::string> registered_scenarios();

/// Runs every grid point (possibly on a worker pool; output order follows
/// grid index regardless of completion order). Deterministic for fixed seed.
std::vector<io::Record> run_scenario(const ScenarioConfig& cfg);

LogBase parse_base(const std::string& s);

}  // namespace infophys::scenarios

#endif
