#pragma once
// Scenario configuration: a single strict JSON file describing the world,
// initial beliefs, planner options and named observation models. Unknown
// keys are rejected; parse errors carry line numbers.

#include <map>
#include <optional>
#include <string>

#include "robomendel/engine.hpp"
#include "robomendel/models.hpp"

namespace robomendel {

struct ScenarioConfig {
    genetics::WorldConfig world = genetics::WorldConfig::standard_pea_world();
    std::map<std::string, double> initial_beliefs;  // overrides for the defaults
    engine::EngineOptions planner;
    std::map<std::string, OutcomeModel> models;  // named models for `ip`
    std::string output_dir;

    static ScenarioConfig defaults();

    // Parse and fully validate; throws ConfigError with a line-precise
    // message on parse failure and a key-path message on validation failure.
    static ScenarioConfig parse(const std::string& text);
    static ScenarioConfig load(const std::string& path);

    const OutcomeModel& model(const std::string& name) const;
    engine::BeliefState initial_belief_state() const;
};

}  // namespace robomendel
