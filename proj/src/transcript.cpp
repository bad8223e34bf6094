#include "robomendel/transcript.hpp"

namespace robomendel::engine {

using nlohmann::json;

json to_json(const BeliefState& b) {
    json j;
    j["probabilities"] = b.probabilities;
    j["tau"] = b.tau;
    j["proposed_models"] = b.proposed_models;
    j["resolved"] = b.resolved;
    j["hy_exists"] = b.hy_exists;
    return j;
}

BeliefState belief_from_json(const json& j) {
    BeliefState b;
    b.probabilities = j.at("probabilities").get<std::map<std::string, double>>();
    b.tau = j.at("tau").get<std::map<std::string, double>>();
    b.proposed_models = j.at("proposed_models").get<std::set<std::string>>();
    b.resolved = j.at("resolved").get<std::set<std::string>>();
    b.hy_exists = j.at("hy_exists").get<bool>();
    return b;
}

json to_json(const ScoreRow& row) {
    return json{{"experiment", row.experiment}, {"score_bits", row.score_bits}, {"cost", row.cost}};
}

json to_json(const ObservedResult& r) {
    json j;
    j["experiment"] = r.experiment;
    j["counts"] = r.counts;
    j["progeny"] = r.progeny;
    j["anomalous_labels"] = r.anomalous_labels;
    return j;
}

json to_json(const PlanningCycle& c) {
    json j;
    j["cycle"] = c.index;
    j["scores"] = json::array();
    for (const auto& row : c.scores) j["scores"].push_back(to_json(row));
    j["chosen"] = c.chosen;
    j["observed"] = json::array();
    for (const auto& r : c.observed) j["observed"].push_back(to_json(r));
    j["notes"] = c.notes;
    j["belief_before"] = to_json(c.belief_before);
    j["belief_after"] = to_json(c.belief_after);
    return j;
}

json to_json(const RunTranscript& t) {
    json j;
    j["schema"] = "robomendel-transcript-v1";
    j["seed"] = t.seed;
    j["path"] = to_string(t.path);
    j["cycles"] = json::array();
    for (const auto& c : t.cycles) j["cycles"].push_back(to_json(c));
    j["final_belief"] = to_json(t.final_belief);
    return j;
}

std::string dump_transcript(const RunTranscript& t) { return to_json(t).dump(2) + "\n"; }

}  // namespace robomendel::engine
