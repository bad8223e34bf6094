#include <doctest.h>

#include <cmath>
#include <map>

#include "robomendel/engine.hpp"
#include "robomendel/transcript.hpp"

using namespace robomendel;
using namespace robomendel::engine;

namespace {

std::map<std::string, double> score_map(const PlanningCycle& c) {
    std::map<std::string, double> m;
    for (const auto& row : c.scores) m[row.experiment] = row.score_bits;
    return m;
}

double h2(double p) { return -(p * std::log2(p) + (1 - p) * std::log2(1 - p)); }

}  // namespace

TEST_CASE("standard set grows from six to nine designs") {
    EngineOptions opts;
    auto b = BeliefState::initial();
    CHECK(standard_set(b, opts).size() == 6);
    b.hy_exists = true;
    CHECK(standard_set(b, opts).size() == 9);
}

TEST_CASE("initial cycle ranking") {
    EngineOptions opts;
    const auto cycle = evaluate_cycle(BeliefState::initial(), opts);
    const auto scores = score_map(cycle);

    CHECK(scores.at("wh-x-wh") == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(scores.at("mouse-x-lion") == doctest::Approx(h2(0.999)).epsilon(1e-9));
    CHECK(scores.at("wh-x-pu") > scores.at("mouse-x-lion"));
    CHECK(scores.at("wh-x-pu") < scores.at("wh-x-wh"));
    CHECK(scores.at("wh-x-pu-swap") == 0.0);
    CHECK(scores.at("pu-x-pu-swap") == 0.0);
    CHECK(scores.at("pu-x-pu-self") == 0.0);

    CHECK(cycle.scores[0].experiment == "wh-x-wh");
    CHECK(cycle.scores[1].experiment == "wh-x-pu");
    CHECK(cycle.scores[2].experiment == "mouse-x-lion");
    CHECK(cycle.chosen == std::vector<std::string>{"wh-x-wh"});

    // Tied zero rows order by cost (the self-cross is one planting, the
    // swaps are two), then lexicographically.
    CHECK(cycle.scores[3].experiment == "pu-x-pu-self");
    CHECK(cycle.scores[4].experiment == "pu-x-pu-swap");
    CHECK(cycle.scores[5].experiment == "wh-x-pu-swap");
}

TEST_CASE("score doubles once heritability is settled") {
    EngineOptions opts;
    auto b = BeliefState::initial();
    const double before = score_map(evaluate_cycle(b, opts)).at("wh-x-pu");

    b.probabilities[names::kWhHeritable] = 0.999;
    b.tau["Wh"] = 0.999;
    b.resolved.insert(names::kWhHeritable);
    b.proposed_models.erase(names::kWhHeritable);
    const auto cycle = evaluate_cycle(b, opts);
    const auto scores = score_map(cycle);
    CHECK(scores.at("wh-x-pu") == doctest::Approx(2.0 * before).epsilon(0.01));
    CHECK(cycle.scores[0].experiment == "wh-x-pu");
    CHECK(scores.at("wh-x-wh") == 0.0);  // settled question, nothing to learn
}

TEST_CASE("swap experiment is a clean one-bit disambiguation") {
    EngineOptions opts;
    auto b = BeliefState::initial();
    b.probabilities[names::kWhHeritable] = 0.999;
    b.tau["Wh"] = 0.999;
    b.resolved.insert(names::kWhHeritable);
    b.proposed_models.erase(names::kWhHeritable);
    b.probabilities[names::kSameSpecies] = 0.999;
    b.resolved.insert(names::kSameSpecies);
    b.proposed_models.erase(names::kSameSpecies);
    b.probabilities[names::kOneParent] = 0.5;
    b.proposed_models.insert(names::kOneParent);
    b.hy_exists = true;

    const auto cycle = evaluate_cycle(b, opts);
    const auto scores = score_map(cycle);
    CHECK(scores.at("wh-x-pu-swap") == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(scores.at("wh-x-pu") == 0.0);
    CHECK(scores.at("pu-x-pu-swap") == 0.0);
    CHECK(scores.at("hy-x-hy") == 0.0);  // no hidden-signal model proposed yet
    CHECK(cycle.scores[0].experiment == "wh-x-pu-swap");
    CHECK(cycle.chosen == std::vector<std::string>{"wh-x-pu-swap"});
}

TEST_CASE("hybrid tests after the transmission proposal") {
    EngineOptions opts;
    auto b = BeliefState::initial();
    for (const auto* name : {names::kWhHeritable, names::kSameSpecies}) {
        b.probabilities[name] = 0.999;
        b.resolved.insert(name);
        b.proposed_models.erase(name);
    }
    b.tau["Wh"] = 0.999;
    b.probabilities[names::kOneParent] = 0.001;
    b.resolved.insert(names::kOneParent);
    b.probabilities[names::kTransmission] = 0.5;
    b.proposed_models.insert(names::kTransmission);
    b.hy_exists = true;

    const auto cycle = evaluate_cycle(b, opts);
    const auto scores = score_map(cycle);
    CHECK(scores.at("hy-x-wh") == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(scores.at("hy-x-hy") == doctest::Approx(0.984).epsilon(0.005));
    CHECK(scores.at("hy-x-pu") == 0.0);
    CHECK(scores.at("wh-x-pu-swap") == 0.0);
    CHECK(cycle.scores[0].experiment == "hy-x-wh");
    CHECK(cycle.scores[1].experiment == "hy-x-hy");
    // Within the joint-selection window: run both.
    CHECK(cycle.chosen == std::vector<std::string>{"hy-x-wh", "hy-x-hy"});
}

TEST_CASE("self-cross scores the novel-trait screen") {
    EngineOptions opts;
    auto b = BeliefState::initial();
    for (const auto* name : {names::kWhHeritable, names::kSameSpecies}) {
        b.probabilities[name] = 0.999;
        b.resolved.insert(name);
        b.proposed_models.erase(name);
    }
    b.tau["Wh"] = 0.999;
    b.probabilities[names::kOneParent] = 0.001;
    b.resolved.insert(names::kOneParent);
    b.probabilities[names::kTransmission] = 0.999;
    b.resolved.insert(names::kTransmission);
    b.probabilities[names::kMoreTraits] = 0.5;
    b.proposed_models.insert(names::kMoreTraits);
    b.hy_exists = true;

    const auto cycle = evaluate_cycle(b, opts);
    const auto scores = score_map(cycle);
    const double expected = 0.5 * (std::log2(40.0) - gaussian_entropy(1.0));
    CHECK(scores.at("pu-x-pu-self") == doctest::Approx(expected).epsilon(1e-12));
    CHECK(scores.at("pu-x-pu-self") == doctest::Approx(1.6374).epsilon(0.005));
    CHECK(scores.at("hy-x-hy") == 0.0);
    CHECK(scores.at("hy-x-wh") == 0.0);
    CHECK(cycle.scores[0].experiment == "pu-x-pu-self");
}

TEST_CASE("greedy choice is invariant to score scaling") {
    // Scaling every score by a positive constant cannot change the argmax;
    // the tau mechanism is exactly such a scale on single designs, so check
    // ordering stability across a global tau sweep instead.
    EngineOptions opts;
    const auto base = evaluate_cycle(BeliefState::initial(), opts);
    std::vector<ScoreRow> scaled = base.scores;
    for (auto& row : scaled) row.score_bits *= 3.7;
    std::sort(scaled.begin(), scaled.end(), [](const ScoreRow& a, const ScoreRow& b) {
        if (a.score_bits != b.score_bits) return a.score_bits > b.score_bits;
        if (a.cost != b.cost) return a.cost < b.cost;
        return a.experiment < b.experiment;
    });
    CHECK(scaled.front().experiment == base.scores.front().experiment);
}

TEST_CASE("ingest: heritability confirmation") {
    EngineOptions opts;
    const auto b = BeliefState::initial();
    ObservedResult r;
    r.experiment = "wh-x-wh";
    r.counts = {{"Wh", 30}};
    r.progeny = 30;
    const auto next = ingest(b, {r}, opts);
    CHECK(next.prob(names::kWhHeritable) == doctest::Approx(0.999));
    CHECK(next.tau_for("Wh") == doctest::Approx(0.999));
    CHECK(next.resolved.count(names::kWhHeritable) == 1);
    CHECK_FALSE(next.in_play(names::kWhHeritable));
}

TEST_CASE("ingest: cross success settles the species question and proposes one-parent") {
    EngineOptions opts;
    auto b = BeliefState::initial();
    b.probabilities[names::kWhHeritable] = 0.999;
    b.resolved.insert(names::kWhHeritable);
    b.proposed_models.erase(names::kWhHeritable);

    ObservedResult r;
    r.experiment = "wh-x-pu";
    r.counts = {{"Pu", 30}};
    r.progeny = 30;
    const auto next = ingest(b, {r}, opts);
    CHECK(next.prob(names::kSameSpecies) == doctest::Approx(0.999));
    CHECK(next.hy_exists);
    CHECK(next.proposed_models.count(names::kOneParent) == 1);
    CHECK(next.prob(names::kOneParent) == doctest::Approx(0.5));
}

TEST_CASE("ingest: washed-out planting leaves the question open") {
    EngineOptions opts;
    const auto b = BeliefState::initial();
    ObservedResult r;
    r.experiment = "wh-x-pu";
    r.progeny = 0;
    const auto next = ingest(b, {r}, opts);
    CHECK(next.prob(names::kSameSpecies) < 0.5);   // failure leans different-species
    CHECK(next.prob(names::kSameSpecies) > 0.001);  // but is not decisive
    CHECK(next.in_play(names::kSameSpecies));
    CHECK_FALSE(next.hy_exists);
}

TEST_CASE("ingest: symmetric swap refutes one-parent and invites the hidden signal") {
    EngineOptions opts;
    auto b = BeliefState::initial();
    b.probabilities[names::kOneParent] = 0.5;
    b.proposed_models.insert(names::kOneParent);
    ObservedResult r;
    r.experiment = "wh-x-pu-swap";
    r.counts = {{"Pu", 30}};
    r.progeny = 30;
    const auto next = ingest(b, {r}, opts);
    CHECK(next.prob(names::kOneParent) == doctest::Approx(0.001));
    CHECK(next.resolved.count(names::kOneParent) == 1);
    CHECK(next.proposed_models.count(names::kTransmission) == 1);
    CHECK(next.prob(names::kTransmission) == doctest::Approx(0.5));
}

TEST_CASE("ingest: impossible outcome raises") {
    EngineOptions opts;
    const auto b = BeliefState::initial();
    ObservedResult r;
    r.experiment = "pu-x-pu-swap";
    r.counts = {{"Wh", 3}, {"Pu", 27}};
    r.progeny = 30;
    CHECK_THROWS_AS(ingest(b, {r}, opts), InconsistentResultError);

    ObservedResult mixed;
    mixed.experiment = "wh-x-wh";
    mixed.counts = {{"Wh", 10}, {"Pu", 20}};
    mixed.progeny = 30;
    CHECK_THROWS_AS(ingest(b, {mixed}, opts), InconsistentResultError);
}

TEST_CASE("canonical run reproduces the experiment sequence") {
    const auto world = genetics::WorldConfig::standard_pea_world();
    const auto transcript = run_sequence(world, 10);
    REQUIRE(transcript.cycles.size() == 5);
    CHECK(transcript.cycles[0].chosen == std::vector<std::string>{"wh-x-wh"});
    CHECK(transcript.cycles[1].chosen == std::vector<std::string>{"wh-x-pu"});
    CHECK(transcript.cycles[2].chosen == std::vector<std::string>{"wh-x-pu-swap"});
    CHECK(transcript.cycles[3].chosen == std::vector<std::string>{"hy-x-wh", "hy-x-hy"});
    CHECK(transcript.cycles[4].chosen == std::vector<std::string>{"pu-x-pu-self"});

    // After the full sequence only the inter-species residual is left.
    const auto final_cycle = evaluate_cycle(transcript.final_belief, EngineOptions{});
    CHECK(final_cycle.scores.front().score_bits <= 0.012);
    CHECK(final_cycle.scores.front().experiment == "mouse-x-lion");

    // Re-scoring an experiment right after its decisive result stays small.
    const auto after1 = evaluate_cycle(transcript.cycles[0].belief_after, EngineOptions{});
    CHECK(score_map(after1).at("wh-x-wh") <= h2(0.999));
}

TEST_CASE("run sequence is deterministic") {
    const auto world = genetics::WorldConfig::standard_pea_world();
    const auto t1 = run_sequence(world, 10);
    const auto t2 = run_sequence(world, 10);
    CHECK(dump_transcript(t1) == dump_transcript(t2));

    auto other = world;
    other.rng_seed = 777;
    const auto t3 = run_sequence(other, 10);
    // Different seed, same chosen sequence (the decisions are robust).
    REQUIRE(t3.cycles.size() == 5);
    CHECK(t3.cycles[3].chosen == t1.cycles[3].chosen);
}

TEST_CASE("cycle budget is enforced") {
    const auto world = genetics::WorldConfig::standard_pea_world();
    CHECK_THROWS_AS(run_sequence(world, 3), MaxCyclesExceededError);
}

TEST_CASE("pu-undilutable path is rejected by the dilution test") {
    const auto world = genetics::WorldConfig::standard_pea_world();
    const auto transcript = alternative_path(ResearchPath::PuUndilutable, world, 10);
    REQUIRE(transcript.cycles.size() == 3);
    CHECK(transcript.cycles[2].chosen == std::vector<std::string>{"hy-x-wh"});
    CHECK(score_map(transcript.cycles[2]).at("hy-x-wh") == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(transcript.final_belief.prob(names::kPuUndilutable) == doctest::Approx(0.001));
    CHECK(transcript.final_belief.proposed_models.count(names::kTransmission) == 1);
    bool flagged = false;
    for (const auto& note : transcript.cycles[2].notes) {
        flagged = flagged || note.find("hidden") != std::string::npos;
    }
    CHECK(flagged);
}

TEST_CASE("species-hybrid path is rejected by the fertility test") {
    const auto world = genetics::WorldConfig::standard_pea_world();
    const auto transcript = alternative_path(ResearchPath::SpeciesHybrid, world, 10);
    REQUIRE(transcript.cycles.size() == 3);
    CHECK(transcript.cycles[2].chosen == std::vector<std::string>{"hy-x-hy"});
    CHECK(score_map(transcript.cycles[2]).at("hy-x-hy") == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(transcript.final_belief.prob(names::kSpeciesHybrid) == doctest::Approx(0.001));
    CHECK(transcript.final_belief.proposed_models.count(names::kTransmission) == 1);
    // With 30 progeny at one-in-four odds, a white child is near-certain.
    const auto& observed = transcript.cycles[2].observed.front();
    CHECK(observed.progeny == 30);
    CHECK(observed.counts.count("Wh"));
}

TEST_CASE("belief state json round trip") {
    auto b = BeliefState::initial();
    b.probabilities["transmission"] = 0.5;
    b.proposed_models.insert("transmission");
    b.resolved.insert("one-parent");
    b.hy_exists = true;
    const auto j = to_json(b);
    const auto back = belief_from_json(j);
    CHECK(to_json(back) == j);
}
