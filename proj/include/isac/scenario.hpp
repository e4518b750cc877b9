#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "isac/fading.hpp"
#include "isac/montecarlo.hpp"
#include "isac/params.hpp"

namespace isac {

// Parsed scenario file. Distances are given in units of v; set
// v_override = 1 to give them in metres.
struct Scenario {
  NetworkParams params;
  ScenarioGeometry geometry;
  std::vector<double> theta_db;
  SimConfig sim;
  std::vector<SinrMode> modes;
  // Window radius in units of 1/sqrt(pi lambda); overrides sim.r_max.
  double r_max_factor = 30.0;

  std::vector<double> theta_linear() const;
};

Scenario default_scenario();

// Sections [network] [geometry] [thresholds] [simulation] [modes]. Unknown
// sections or keys, malformed values and invalid parameters raise
// ParseError with the offending line and column.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

// Inclusive grid min, min + step, ..., max.
std::vector<double> make_grid(double min, double max, double step);

}  // namespace isac
