#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "infophys/io.hpp"
#include "infophys/scenarios.hpp"
#include "json.hpp"

namespace {

nlohmann::json load_config(const std::string& path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return nlohmann::json::parse(buf.str());
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  return nlohmann::json::parse(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"infophys: information measures across physical regimes"};

  std::string scenario, config_path, out_path, base_str = "2",
                                               format_str = "csv";
  std::uint64_t seed = 1;
  int workers = 1;
  bool list = false, timings = false;

  app.add_option("--scenario", scenario, "scenario name");
  app.add_option("--config", config_path,
                 "JSON config file, '-' for stdin; CLI flags override it");
  app.add_option("--seed", seed, "master RNG seed")->capture_default_str();
  app.add_option("--base", base_str, "log base")
      ->check(CLI::IsMember({"2", "e", "10"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "output path (default: stdout)");
  app.add_option("--format", format_str, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--workers", workers, "worker threads for grid points")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--timings", timings,
               "append a wall_time_ms column (breaks byte-identical reruns)");
  app.add_flag("--list", list, "list scenarios and exit");

  CLI11_PARSE(app, argc, argv);

  if (list) {
    for (const auto& name : infophys::scenarios::registered_scenarios())
      std::cout << name << "\n";
    return 0;
  }

  try {
    infophys::scenarios::ScenarioConfig cfg;
    if (!config_path.empty())
      cfg = infophys::scenarios::config_from_json(load_config(config_path));
    if (!scenario.empty()) cfg.scenario = scenario;
    if (cfg.scenario.empty())
      throw std::invalid_argument("no scenario given (--scenario or config)");
    if (app.count("--seed")) cfg.seed = seed;
    if (app.count("--base")) cfg.base = infophys::scenarios::parse_base(base_str);
    if (app.count("--workers")) cfg.workers = workers;
    if (timings) cfg.timings = true;

    auto records = infophys::scenarios::run_scenario(cfg);
    auto format = format_str == "json" ? infophys::io::Format::Json
                                       : infophys::io::Format::Csv;
    if (out_path.empty()) {
      infophys::io::emit(records, format, std::cout);
    } else {
      infophys::io::emit_to_file(records, format, out_path);
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
