#include <algorithm>

#include "doctest.h"
#include "infophys/scenarios.hpp"

using namespace infophys::scenarios;

namespace {

std::string field(const infophys::io::Record& r, const std::string& name) {
  for (const auto& [k, v] : r.fields)
    if (k == name) return v;
  FAIL("missing field ", name);
  return {};
}

}  // namespace

TEST_CASE("config parsing") {
  auto cfg = config_from_json(nlohmann::json::parse(R"({
    "schema": 1,
    "scenario": "capacity",
    "grid": {"alpha": [0.5, 1.0], "snr": [3.0]},
    "seed": 42,
    "base": "e",
    "workers": 2
  })"));
  CHECK(cfg.scenario == "capacity");
  CHECK(cfg.seed == 42);
  CHECK(cfg.base == LogBase::E);
  CHECK(cfg.workers == 2);
  REQUIRE(cfg.grid.count("alpha"));
  CHECK(cfg.grid["alpha"].size() == 2);

  CHECK_THROWS(config_from_json(nlohmann::json::parse(
      R"({"schema": 7, "scenario": "peres"})")));
  CHECK_THROWS(parse_base("3"));
}

TEST_CASE("unknown scenario and empty grid are rejected") {
  ScenarioConfig cfg;
  cfg.scenario = "no-such-scenario";
  CHECK_THROWS(run_scenario(cfg));

  cfg.scenario = "capacity";
  cfg.grid["alpha"] = {};
  CHECK_THROWS(run_scenario(cfg));
}

TEST_CASE("grid expansion produces the cartesian product, in order") {
  ScenarioConfig cfg;
  cfg.scenario = "capacity";
  cfg.grid = {{"alpha", {0.0, 1.0}}, {"snr", {1.0, 3.0, 7.0}}, {"bandwidth", {1.0}}};
  auto recs = run_scenario(cfg);
  REQUIRE(recs.size() == 6);
  // alpha varies slowest (alphabetical param order), snr fastest
  CHECK(field(recs[0], "alpha") == "0");
  CHECK(field(recs[0], "snr") == "1");
  CHECK(field(recs[2], "snr") == "7");
  CHECK(field(recs[3], "alpha") == "1");
  CHECK(field(recs[5], "capacity_bits_per_s") == "3");  // log2(1+7)
}

TEST_CASE("all registered scenarios run with reduced grids") {
  std::map<std::string, std::map<std::string, std::vector<double>>> small = {
      {"equilibrate", {{"steps", {3}}}},
      {"gas-mi", {{"beta", {0.0}}, {"samples", {20000}}}},
      {"boost-single", {{"xi", {1.0}}, {"grid_res", {5}}}},
      {"boost-pair", {{"xi", {1.0}}, {"grid_res", {5}}, {"sigma_over_m", {1.0}}}},
      {"fig2", {{"xi", {1.0}}}},
      {"replica-check", {{"n_matrices", {5}}}},
  };
  for (const auto& name : registered_scenarios()) {
    ScenarioConfig cfg;
    cfg.scenario = name;
    if (small.count(name)) cfg.grid = small[name];
    auto recs = run_scenario(cfg);
    CHECK(!recs.empty());
  }
}

TEST_CASE("results are deterministic and independent of worker count") {
  for (const char* name : {"capacity", "gas-mi"}) {
    ScenarioConfig cfg;
    cfg.scenario = name;
    cfg.seed = 77;
    if (std::string(name) == "gas-mi")
      cfg.grid = {{"beta", {0.0, 0.5}}, {"samples", {20000}}};
    cfg.workers = 1;
    auto serial = run_scenario(cfg);
    cfg.workers = 4;
    auto parallel = run_scenario(cfg);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i)
      CHECK(serial[i].fields == parallel[i].fields);
  }
}

TEST_CASE("a failing grid point reports its index and scenario") {
  ScenarioConfig cfg;
  cfg.scenario = "gas-mi";
  cfg.grid = {{"beta", {0.0, 2.0}}, {"samples", {20000}}};  // beta = 2 invalid
  try {
    run_scenario(cfg);
    FAIL("expected a failure for beta > 1");
  } catch (const std::exception& e) {
    std::string msg = e.what();
    CHECK(msg.find("grid point 1") != std::string::npos);
    CHECK(msg.find("gas-mi") != std::string::npos);
  }
}
