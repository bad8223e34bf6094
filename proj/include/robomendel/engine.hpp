#pragma once
// The sequential planning loop: belief state, the standard experiment set
// scored per cycle, greedy selection by targeted E(Ip), result ingestion with
// Bayes updates and decisive-posterior clamps, and the alternative-model
// research paths.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "robomendel/genetics.hpp"
#include "robomendel/planner.hpp"

namespace robomendel::engine {

// Proposition and design identifiers used throughout the loop.
namespace names {
inline constexpr const char* kLfls = "LFLS";
inline constexpr const char* kWhHeritable = "Wh-heritable";
inline constexpr const char* kSameSpecies = "same-species";
inline constexpr const char* kOneParent = "one-parent";
inline constexpr const char* kTransmission = "transmission";
inline constexpr const char* kMoreTraits = "more-traits";
inline constexpr const char* kPuUndilutable = "Pu-undilutable";
inline constexpr const char* kSpeciesHybrid = "species-hybrid";
}  // namespace names

struct EngineOptions {
    int replicates_per_design = 20;   // progeny per scored cross
    double clamp_lo = 0.001;
    double clamp_hi = 0.999;
    bool clamp = true;                // decisive-posterior clamp on ingestion
    double joint_selection_window = 0.05;  // run both top designs when this close
    double stop_threshold = 0.012;    // converged when the best score falls here
    int max_cycles = 10;
    double wh_pu_confound = 0.3;      // chance the wh-x-pu planting fails to grow
    double divergence_window_sd = 20.0;  // width of the novel-trait density window
};

// Named probabilities, targeting weights and the set of model proposals
// currently in play. Proposals leave the set once an experiment resolves
// them; the numeric record of the resolution stays in `probabilities`.
struct BeliefState {
    std::map<std::string, double> probabilities;
    std::map<std::string, double> tau;       // observable id -> targeting weight
    std::set<std::string> proposed_models;
    std::set<std::string> resolved;
    bool hy_exists = false;

    static BeliefState initial();

    double prob(const std::string& name) const;
    double tau_for(const std::string& observable) const;  // default 1
    bool in_play(const std::string& proposition) const;
};

struct ScoreRow {
    std::string experiment;
    double score_bits = 0.0;
    double cost = 0.0;
};

struct ObservedResult {
    std::string experiment;
    std::map<std::string, int> counts;  // phenotype label -> count
    int progeny = 0;
    std::vector<std::string> anomalous_labels;  // unexpected phenotypes seen
};

struct PlanningCycle {
    int index = 0;
    std::vector<ScoreRow> scores;  // sorted: score desc, then cost asc, then id
    std::vector<std::string> chosen;
    std::vector<ObservedResult> observed;
    std::vector<ObservationSample> samples;  // raw data behind `observed`; not serialized
    std::vector<std::string> notes;
    BeliefState belief_before;
    BeliefState belief_after;
};

enum class ResearchPath { Canonical, PuUndilutable, SpeciesHybrid };

std::string to_string(ResearchPath path);
ResearchPath research_path_from_string(const std::string& s);

struct RunTranscript {
    std::uint64_t seed = 0;
    ResearchPath path = ResearchPath::Canonical;
    std::vector<PlanningCycle> cycles;
    BeliefState final_belief;
};

// The standard experiment set under the current beliefs: six designs before
// the hybrid exists, nine after. Hypothesis outcomes are generated from the
// models currently in play; designs whose models all predict the same
// distribution carry a single hypothesis and score zero.
std::vector<ExperimentDesign> standard_set(const BeliefState& b, const EngineOptions& opts);

// Score every standard design (targeted E(Ip)), sort with the tie-break rule
// (score desc, cost asc, id asc) and mark the chosen design(s): the argmax,
// plus the runner-up when within the joint-selection window.
PlanningCycle evaluate_cycle(const BeliefState& b, const EngineOptions& opts);

// Summarize a simulated sample for ingestion.
ObservedResult summarize_result(const std::string& design_id, const ObservationSample& sample,
                                const genetics::WorldConfig& w);

// Bayes-update the relevant proposition from the observed counts, clamp
// decisive posteriors, retire resolved proposals and fire the follow-up
// proposal triggers. `alt_proposal` replaces the one-parent proposal on the
// alternative research paths.
BeliefState ingest(const BeliefState& b, const std::vector<ObservedResult>& results,
                   const EngineOptions& opts, std::vector<std::string>* notes = nullptr,
                   std::optional<std::string> alt_proposal = std::nullopt);

// Full greedy loop against the simulated world. Stops once the best score
// falls to the stop threshold; throws MaxCyclesExceededError if the budget
// runs out first.
RunTranscript run_sequence(const genetics::WorldConfig& world, int max_cycles,
                           const EngineOptions& opts = {});

// The alternative research paths: canonical through the wh-x-pu cycle, then
// the named wrong model is proposed instead of one-parent. The transcript
// ends once its test rejects it and the transmission model enters play.
RunTranscript alternative_path(ResearchPath path, const genetics::WorldConfig& world,
                               int max_cycles, const EngineOptions& opts = {});

// Relative entropy of a 10-sd divergent unit-Gaussian trait against the
// half-weight uniform window model: log2(2W) - gaussian_entropy(sd).
double trait_divergence_bits(double window_sd, double trait_sd);

}  // namespace robomendel::engine
