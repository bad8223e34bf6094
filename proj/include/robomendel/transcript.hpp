#pragma once
// JSON serialization of run transcripts and belief states. Field names are
// stable and documented in the README; keys are emitted sorted, so parsing a
// transcript and re-dumping it is byte-identical.

#include <string>

#include <json.hpp>

#include "robomendel/engine.hpp"

namespace robomendel::engine {

nlohmann::json to_json(const BeliefState& b);
nlohmann::json to_json(const ScoreRow& row);
nlohmann::json to_json(const ObservedResult& r);
nlohmann::json to_json(const PlanningCycle& c);
nlohmann::json to_json(const RunTranscript& t);

BeliefState belief_from_json(const nlohmann::json& j);

// Canonical textual form: 2-space indent, sorted keys, trailing newline.
std::string dump_transcript(const RunTranscript& t);

}  // namespace robomendel::engine
