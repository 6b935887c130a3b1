// scenario.hpp — Scenario configuration parsing and execution for the CLI

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "decolab/series.hpp"

namespace decolab::scenario {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TimeGridSpec {
    double t_min = 0.0;
    double t_max = 1.0;
    int points = 100;
    bool log_spaced = false;
};

struct ScenarioConfig {
    std::string name; // spinbath, spinboson, freeparticle-*, sterngerlach, machzehnder
    std::map<std::string, double> params;
    TimeGridSpec grid;
    std::uint64_t seed = 0;
};

// Parses the flat key-value format with a single [scenario] section header.
// Unknown scenario names and unknown or missing keys raise ConfigError.
ScenarioConfig parse_config(const std::string& path);
ScenarioConfig parse_config_text(const std::string& text);

// Runs a scenario over its time grid. Columns are (t, de_analytic, de_numeric,
// scenario-specific auxiliaries). Deterministic for a fixed config + seed.
series::DecoherenceSeries run_scenario(const ScenarioConfig& config);

// Data behind the two reference figures: the plane-wave measure vs t/tau_D
// with the naive exponential for comparison (1), and the position-coupling
// Gaussian measure vs t/tau_D (2).
series::DecoherenceSeries figure_series(int figure, int points = 100);

} // namespace decolab::scenario
