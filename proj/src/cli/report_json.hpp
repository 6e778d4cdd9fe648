#pragma once

#include <json.hpp>

#include "lasd/bootstrap.hpp"
#include "lasd/simulate.hpp"

namespace lasd::cli {

constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const TestReport& report);
nlohmann::json to_json(const TuningSequences& tuning);

/// Scenario file fields: family, parameters, n_per_sample, and optionally
/// reps_mc, reps, seed, alpha, stats, multipliers {a, b, c, d}. Unknown keys
/// are rejected. Throws ConfigError.
ScenarioSpec scenario_from_json(const nlohmann::json& doc);

}  // namespace lasd::cli
