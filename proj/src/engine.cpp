#include "robomendel/engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace robomendel::engine {

namespace {

using names::kLfls;
using names::kMoreTraits;
using names::kOneParent;
using names::kPuUndilutable;
using names::kSameSpecies;
using names::kSpeciesHybrid;
using names::kTransmission;
using names::kWhHeritable;

constexpr const char* kWhChild = "wh-child";
constexpr const char* kPuChild = "pu-child";
constexpr const char* kProgeny = "progeny";
constexpr const char* kNoProgeny = "no-progeny";
constexpr const char* kGrow = "progeny-grow";
constexpr const char* kNoGrowth = "no-growth";

// A scored entry: the public design plus how the engine evaluates it.
struct DesignEntry {
    ExperimentDesign design;
    std::vector<double> weights;            // aligned with hypothesis_outcomes
    double tau = 1.0;
    std::set<std::string> target_ids;       // empty = all components
    bool trait_screen = false;              // self-cross novel-trait formula
    double trait_weight = 0.0;

    DesignEntry(ExperimentDesign design_, std::vector<double> weights_)
        : design(std::move(design_)), weights(std::move(weights_)) {}
};

OutcomeSpace child_color_space() { return OutcomeSpace({kWhChild, kPuChild}); }

DiscreteDistribution child_colors(double p_white) {
    return DiscreteDistribution(child_color_space(), {p_white, 1.0 - p_white});
}

// Single-hypothesis placeholder: every active model predicts the same
// distribution, so the design scores exactly zero.
DesignEntry settled_design(const std::string& id, DiscreteDistribution prediction, int n) {
    DesignEntry e{ExperimentDesign(id, prediction.space(), {{"current-model", prediction}}, n),
                  {1.0}};
    return e;
}

HypothesisMixture mixture_for(const DesignEntry& e) {
    std::vector<MixtureComponent> components;
    components.reserve(e.design.hypothesis_outcomes.size());
    for (const auto& [id, dist] : e.design.hypothesis_outcomes) {
        components.push_back({id, OutcomeModel::flat()});
    }
    return HypothesisMixture(std::move(components), e.weights);
}

std::vector<DesignEntry> build_entries(const BeliefState& b, const EngineOptions& opts) {
    std::vector<DesignEntry> entries;
    const int n = opts.replicates_per_design;

    // mouse-x-lion: the generic inter-species cross, a disambiguation of the
    // standing inheritance framework itself.
    {
        OutcomeSpace space({kProgeny, kNoProgeny});
        const double p = b.prob(kLfls);
        DesignEntry e{ExperimentDesign("mouse-x-lion", space,
                                       {{kLfls, DiscreteDistribution::point_mass(space, kNoProgeny)},
                                        {"not-LFLS", DiscreteDistribution::point_mass(space, kProgeny)}},
                                       1),
                      {p, 1.0 - p}};
        entries.push_back(std::move(e));
    }

    // wh-x-wh: does the white plant breed true?
    if (b.in_play(kWhHeritable)) {
        const double p = b.prob(kWhHeritable);
        DesignEntry e{ExperimentDesign("wh-x-wh", child_color_space(),
                                       {{kWhHeritable, child_colors(1.0)},
                                        {"same-species-pea", child_colors(0.0)}},
                                       n),
                      {p, 1.0 - p}};
        e.tau = b.tau_for("Wh");
        entries.push_back(std::move(e));
    } else {
        auto e = settled_design("wh-x-wh", child_colors(b.prob(kWhHeritable) >= 0.5 ? 1.0 : 0.0), n);
        e.tau = b.tau_for("Wh");
        entries.push_back(std::move(e));
    }

    // wh-x-pu: do the white and purple plants cross at all? The planting can
    // fail to grow for reasons unrelated to the hypothesis (the confound).
    {
        OutcomeSpace space({kGrow, kNoGrowth});
        const double grow = 1.0 - opts.wh_pu_confound;
        if (b.in_play(kSameSpecies)) {
            const double p = b.prob(kSameSpecies);
            DesignEntry e{ExperimentDesign("wh-x-pu", space,
                                           {{kSameSpecies, DiscreteDistribution(space, {grow, 1.0 - grow})},
                                            {"different-species", DiscreteDistribution(space, {0.0, 1.0})}},
                                           1),
                          {p, 1.0 - p}};
            e.tau = b.tau_for("Wh");
            entries.push_back(std::move(e));
        } else {
            auto prediction = b.prob(kSameSpecies) >= 0.5
                                  ? DiscreteDistribution(space, {grow, 1.0 - grow})
                                  : DiscreteDistribution(space, {0.0, 1.0});
            auto e = settled_design("wh-x-pu", std::move(prediction), 1);
            e.tau = b.tau_for("Wh");
            entries.push_back(std::move(e));
        }
    }

    // wh-x-pu-swap: repeat the cross with the parent roles reversed. Only the
    // one-parent model distinguishes the orientations.
    if (b.in_play(kOneParent)) {
        const double p = b.prob(kOneParent);
        DesignEntry e{ExperimentDesign("wh-x-pu-swap", child_color_space(),
                                       {{kOneParent, child_colors(1.0)},
                                        {"symmetric", child_colors(0.0)}},
                                       n),
                      {p, 1.0 - p}};
        e.design.setup_cost = 2.0;
        e.design.replicate_cost = 2.0;
        entries.push_back(std::move(e));
    } else {
        auto e = settled_design("wh-x-pu-swap", child_colors(0.0), n);
        e.design.setup_cost = 2.0;
        e.design.replicate_cost = 2.0;
        entries.push_back(std::move(e));
    }

    // pu-x-pu-swap: identical parents, so every model predicts the same
    // outcome whichever way the cross runs.
    {
        std::vector<std::pair<std::string, DiscreteDistribution>> hyps;
        std::vector<double> weights;
        if (b.in_play(kOneParent)) {
            const double p = b.prob(kOneParent);
            hyps = {{kOneParent, child_colors(0.0)}, {"symmetric", child_colors(0.0)}};
            weights = {p, 1.0 - p};
        } else {
            hyps = {{"current-model", child_colors(0.0)}};
            weights = {1.0};
        }
        DesignEntry e{ExperimentDesign("pu-x-pu-swap", child_color_space(), std::move(hyps), n),
                      std::move(weights)};
        e.design.setup_cost = 2.0;
        e.design.replicate_cost = 2.0;
        entries.push_back(std::move(e));
    }

    // pu-x-pu-self: the novel-trait screen. Scored with the divergent-trait
    // relative entropy rather than a discrete outcome table.
    {
        OutcomeSpace space({"anomalous-trait", "typical"});
        if (b.in_play(kMoreTraits)) {
            const double p = b.prob(kMoreTraits);
            DesignEntry e{ExperimentDesign("pu-x-pu-self", space,
                                           {{kMoreTraits, DiscreteDistribution::point_mass(space, "anomalous-trait")},
                                            {"no-more-traits", DiscreteDistribution::point_mass(space, "typical")}},
                                           n),
                          {p, 1.0 - p}};
            e.trait_screen = true;
            e.trait_weight = p;
            e.target_ids = {kMoreTraits};
            entries.push_back(std::move(e));
        } else {
            entries.push_back(settled_design("pu-x-pu-self",
                                             DiscreteDistribution::point_mass(space, "typical"), n));
        }
    }

    if (!b.hy_exists) return entries;

    // hy-x-hy: segregation test of the hybrid, or the sterility test when the
    // species-hybrid explanation is in play.
    if (b.in_play(kTransmission)) {
        const double p = b.prob(kTransmission);
        DesignEntry e{ExperimentDesign("hy-x-hy", child_color_space(),
                                       {{kTransmission, child_colors(0.25)},
                                        {kLfls, child_colors(0.0)}},
                                       n),
                      {p, 1.0 - p}};
        entries.push_back(std::move(e));
    } else if (b.in_play(kSpeciesHybrid)) {
        OutcomeSpace space({kProgeny, kNoProgeny});
        const double p = b.prob(kSpeciesHybrid);
        DesignEntry e{ExperimentDesign("hy-x-hy", space,
                                       {{kSpeciesHybrid, DiscreteDistribution::point_mass(space, kNoProgeny)},
                                        {kSameSpecies, DiscreteDistribution::point_mass(space, kProgeny)}},
                                       1),
                      {p, 1.0 - p}};
        entries.push_back(std::move(e));
    } else {
        entries.push_back(settled_design("hy-x-hy", child_colors(0.0), n));
    }

    // hy-x-wh: the dilution series when Pu-undilutable is in play, otherwise
    // the sharpest transmission-vs-LFLS separation (half the children white).
    if (b.in_play(kTransmission)) {
        const double p = b.prob(kTransmission);
        DesignEntry e{ExperimentDesign("hy-x-wh", child_color_space(),
                                       {{kTransmission, child_colors(0.5)},
                                        {kLfls, child_colors(0.0)}},
                                       n),
                      {p, 1.0 - p}};
        entries.push_back(std::move(e));
    } else if (b.in_play(kPuUndilutable)) {
        const double p = b.prob(kPuUndilutable);
        DesignEntry e{ExperimentDesign("hy-x-wh", child_color_space(),
                                       {{kPuUndilutable, child_colors(0.0)},
                                        {"dilution", child_colors(0.5)}},
                                       n),
                      {p, 1.0 - p}};
        entries.push_back(std::move(e));
    } else {
        entries.push_back(settled_design("hy-x-wh", child_colors(0.0), n));
    }

    // hy-x-pu: every model in play predicts all-purple children.
    if (b.in_play(kTransmission)) {
        const double p = b.prob(kTransmission);
        DesignEntry e{ExperimentDesign("hy-x-pu", child_color_space(),
                                       {{kTransmission, child_colors(0.0)},
                                        {kLfls, child_colors(0.0)}},
                                       n),
                      {p, 1.0 - p}};
        entries.push_back(std::move(e));
    } else {
        entries.push_back(settled_design("hy-x-pu", child_colors(0.0), n));
    }

    return entries;
}

double score_entry(const DesignEntry& e, const EngineOptions& opts) {
    if (e.trait_screen) {
        return targeted_ip(e.trait_weight * trait_divergence_bits(opts.divergence_window_sd, 1.0),
                           e.tau);
    }
    const auto mixture = mixture_for(e);
    const double base = e.target_ids.empty()
                            ? expectation_ip(e.design, mixture)
                            : expectation_ip_targeted(e.design, mixture, e.target_ids);
    return targeted_ip(base, e.tau);
}

}  // namespace

double trait_divergence_bits(double window_sd, double trait_sd) {
    if (!(window_sd > 0.0)) throw InvalidArgumentError("divergence window must be positive");
    return std::log2(2.0 * window_sd) - gaussian_entropy(trait_sd);
}

BeliefState BeliefState::initial() {
    BeliefState b;
    b.probabilities = {{kLfls, 0.999}, {kWhHeritable, 0.5}, {kSameSpecies, 0.5}};
    b.tau = {{"Wh", 0.5}};
    b.proposed_models = {kWhHeritable, kSameSpecies};
    return b;
}

double BeliefState::prob(const std::string& name) const {
    const auto it = probabilities.find(name);
    if (it == probabilities.end()) {
        throw InvalidArgumentError("belief state has no probability named " + name);
    }
    return it->second;
}

double BeliefState::tau_for(const std::string& observable) const {
    const auto it = tau.find(observable);
    return it == tau.end() ? 1.0 : it->second;
}

bool BeliefState::in_play(const std::string& proposition) const {
    if (proposition == kLfls) return true;
    return proposed_models.count(proposition) > 0 && resolved.count(proposition) == 0;
}

std::string to_string(ResearchPath path) {
    switch (path) {
        case ResearchPath::Canonical: return "canonical";
        case ResearchPath::PuUndilutable: return "pu-undilutable";
        case ResearchPath::SpeciesHybrid: return "species-hybrid";
    }
    return "canonical";
}

ResearchPath research_path_from_string(const std::string& s) {
    if (s == "canonical") return ResearchPath::Canonical;
    if (s == "pu-undilutable") return ResearchPath::PuUndilutable;
    if (s == "species-hybrid") return ResearchPath::SpeciesHybrid;
    throw InvalidArgumentError("unknown research path: " + s);
}

std::vector<ExperimentDesign> standard_set(const BeliefState& b, const EngineOptions& opts) {
    std::vector<ExperimentDesign> designs;
    for (auto& e : build_entries(b, opts)) designs.push_back(std::move(e.design));
    return designs;
}

PlanningCycle evaluate_cycle(const BeliefState& b, const EngineOptions& opts) {
    PlanningCycle cycle;
    cycle.belief_before = b;
    for (const auto& e : build_entries(b, opts)) {
        cycle.scores.push_back({e.design.id, score_entry(e, opts), e.design.total_cost()});
    }
    std::sort(cycle.scores.begin(), cycle.scores.end(), [](const ScoreRow& a, const ScoreRow& r) {
        if (a.score_bits != r.score_bits) return a.score_bits > r.score_bits;
        if (a.cost != r.cost) return a.cost < r.cost;
        return a.experiment < r.experiment;
    });
    cycle.chosen.push_back(cycle.scores.front().experiment);
    if (cycle.scores.size() > 1) {
        const double gap = cycle.scores[0].score_bits - cycle.scores[1].score_bits;
        if (gap <= opts.joint_selection_window &&
            cycle.scores[1].score_bits > opts.stop_threshold) {
            cycle.chosen.push_back(cycle.scores[1].experiment);
        }
    }
    return cycle;
}

ObservedResult summarize_result(const std::string& design_id, const ObservationSample& sample,
                                const genetics::WorldConfig& w) {
    ObservedResult r;
    r.experiment = design_id;
    r.progeny = static_cast<int>(sample.size());
    if (!sample.empty()) {
        for (const auto& label : sample.labels()) ++r.counts[label];
    }
    // Anomalies: phenotypes outside the common forms of the observed locus.
    const bool trait_screen = design_id == "pu-x-pu-self";
    if (trait_screen && !sample.empty()) {
        const auto& hidden = w.loci.size() > 1 ? w.loci[1] : w.loci[0];
        const std::string common = hidden.phenotype_of({hidden.alleles.first, hidden.alleles.first});
        for (const auto& [label, count] : r.counts) {
            if (label != common) r.anomalous_labels.push_back(label);
        }
    }
    return r;
}

namespace {

// Clamp a posterior into [lo, hi]; a clamped value resolves the proposition.
void apply_posterior(BeliefState& b, const std::string& name, double posterior,
                     const EngineOptions& opts, std::vector<std::string>* notes) {
    double value = posterior;
    bool decisive = false;
    if (opts.clamp) {
        if (posterior >= opts.clamp_hi) {
            value = opts.clamp_hi;
            decisive = true;
        } else if (posterior <= opts.clamp_lo) {
            value = opts.clamp_lo;
            decisive = true;
        }
    }
    b.probabilities[name] = value;
    if (decisive) {
        b.resolved.insert(name);
        b.proposed_models.erase(name);
        if (notes) {
            std::ostringstream msg;
            msg << name << " resolved at " << value;
            notes->push_back(msg.str());
        }
    }
    if (name == kWhHeritable) b.tau["Wh"] = value;
}

void propose(BeliefState& b, const std::string& name, double prior,
             std::vector<std::string>* notes) {
    b.proposed_models.insert(name);
    b.probabilities[name] = prior;
    if (notes) notes->push_back("proposed " + name + " at " + std::to_string(prior));
}

double binomial_pmf(int n, int k, double p) {
    if (p == 0.0) return k == 0 ? 1.0 : 0.0;
    if (p == 1.0) return k == n ? 1.0 : 0.0;
    const double logc = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    return std::exp(logc + k * std::log(p) + (n - k) * std::log(1.0 - p));
}

// Two-hypothesis Bayes update from likelihoods; throws when the outcome is
// impossible under both.
double posterior_from(double prior, double lik_true, double lik_false,
                      const std::string& context) {
    const double num = prior * lik_true;
    const double den = num + (1.0 - prior) * lik_false;
    if (!(den > 0.0)) {
        throw InconsistentResultError("outcome impossible under every active model: " + context);
    }
    return num / den;
}

}  // namespace

BeliefState ingest(const BeliefState& b, const std::vector<ObservedResult>& results,
                   const EngineOptions& opts, std::vector<std::string>* notes,
                   std::optional<std::string> alt_proposal) {
    BeliefState next = b;
    for (const auto& r : results) {
        const int whites = [&] {
            const auto it = r.counts.find("Wh");
            return it == r.counts.end() ? 0 : it->second;
        }();

        if (r.experiment == "mouse-x-lion") {
            const double p = posterior_from(next.prob(kLfls), r.progeny == 0 ? 1.0 : 0.0,
                                            r.progeny == 0 ? 0.0 : 1.0, r.experiment);
            apply_posterior(next, kLfls, p, opts, notes);
            next.resolved.erase(kLfls);  // the framework stays a live question
        } else if (r.experiment == "wh-x-wh") {
            if (!next.in_play(kWhHeritable)) continue;
            if (r.progeny == 0) continue;  // washout; nothing learned
            const bool all_white = whites == r.progeny;
            const bool all_purple = whites == 0;
            if (!all_white && !all_purple) {
                throw InconsistentResultError("wh-x-wh produced mixed flower colors");
            }
            const double p = posterior_from(next.prob(kWhHeritable), all_white ? 1.0 : 0.0,
                                            all_purple ? 1.0 : 0.0, r.experiment);
            apply_posterior(next, kWhHeritable, p, opts, notes);
        } else if (r.experiment == "wh-x-pu") {
            if (next.in_play(kSameSpecies)) {
                const double grow = 1.0 - opts.wh_pu_confound;
                const double p = posterior_from(next.prob(kSameSpecies),
                                                r.progeny > 0 ? grow : 1.0 - grow,
                                                r.progeny > 0 ? 0.0 : 1.0, r.experiment);
                apply_posterior(next, kSameSpecies, p, opts, notes);
            }
            if (r.progeny > 0) {
                next.hy_exists = true;
                if (whites == 0) {
                    // Progeny resemble one parent only; the asymmetry invites
                    // an asymmetric-inheritance proposal (or the configured
                    // alternative explanation).
                    if (alt_proposal) {
                        if (!next.probabilities.count(*alt_proposal)) {
                            propose(next, *alt_proposal, 0.5, notes);
                        }
                    } else if (!next.probabilities.count(kOneParent)) {
                        propose(next, kOneParent, 0.5, notes);
                    }
                }
            }
        } else if (r.experiment == "wh-x-pu-swap") {
            if (!next.in_play(kOneParent) || r.progeny == 0) continue;
            const bool all_white = whites == r.progeny;
            const bool all_purple = whites == 0;
            if (!all_white && !all_purple) {
                throw InconsistentResultError("wh-x-pu-swap produced mixed flower colors");
            }
            const double p = posterior_from(next.prob(kOneParent), all_white ? 1.0 : 0.0,
                                            all_purple ? 1.0 : 0.0, r.experiment);
            apply_posterior(next, kOneParent, p, opts, notes);
            if (all_purple && !next.probabilities.count(kTransmission)) {
                if (notes) notes->push_back("swap result symmetric; a hidden per-parent signal could explain it");
                propose(next, kTransmission, 0.5, notes);
            }
        } else if (r.experiment == "pu-x-pu-swap") {
            if (whites > 0) {
                throw InconsistentResultError("pu-x-pu-swap produced white children");
            }
        } else if (r.experiment == "hy-x-hy" || r.experiment == "hy-x-wh") {
            const double frac = r.experiment == "hy-x-hy" ? 0.25 : 0.5;
            if (next.in_play(kTransmission)) {
                if (r.progeny == 0) continue;
                const double lik_trans = binomial_pmf(r.progeny, whites, frac);
                const double lik_lfls = whites == 0 ? 1.0 : 0.0;
                const double p = posterior_from(next.prob(kTransmission), lik_trans, lik_lfls,
                                                r.experiment);
                apply_posterior(next, kTransmission, p, opts, notes);
                if (next.resolved.count(kTransmission) &&
                    next.prob(kTransmission) >= opts.clamp_hi &&
                    !next.probabilities.count(kMoreTraits)) {
                    if (notes) notes->push_back("transmission confirmed; other rare recessive traits may exist");
                    propose(next, kMoreTraits, 0.5, notes);
                }
            } else if (r.experiment == "hy-x-hy" && next.in_play(kSpeciesHybrid)) {
                const double p = posterior_from(next.prob(kSpeciesHybrid),
                                                r.progeny == 0 ? 1.0 : 0.0,
                                                r.progeny == 0 ? 0.0 : 1.0, r.experiment);
                apply_posterior(next, kSpeciesHybrid, p, opts, notes);
                if (r.progeny > 0) {
                    if (notes && whites > 0) {
                        notes->push_back("hybrid is fertile and segregates white: a hidden genetic state is required");
                    }
                    if (!next.probabilities.count(kTransmission)) {
                        propose(next, kTransmission, 0.5, notes);
                    }
                }
            } else if (r.experiment == "hy-x-wh" && next.in_play(kPuUndilutable)) {
                const double lik_undilutable = whites == 0 ? 1.0 : 0.0;
                const double lik_dilution = binomial_pmf(r.progeny, whites, 0.5);
                const double p = posterior_from(next.prob(kPuUndilutable), lik_undilutable,
                                                lik_dilution, r.experiment);
                apply_posterior(next, kPuUndilutable, p, opts, notes);
                if (whites > 0) {
                    if (notes) {
                        notes->push_back("two identical-looking plants behaved differently: a hidden genetic state is required");
                    }
                    if (!next.probabilities.count(kTransmission)) {
                        propose(next, kTransmission, 0.5, notes);
                    }
                }
            }
        } else if (r.experiment == "pu-x-pu-self") {
            if (!next.in_play(kMoreTraits) || r.progeny == 0) continue;
            const bool anomaly = !r.anomalous_labels.empty();
            // Missing every recessive reveal across n children has
            // probability 0.75^n under the more-traits hypothesis.
            const double miss = std::pow(0.75, r.progeny);
            const double p = posterior_from(next.prob(kMoreTraits), anomaly ? 1.0 - miss : miss,
                                            anomaly ? 0.0 : 1.0, r.experiment);
            apply_posterior(next, kMoreTraits, p, opts, notes);
            if (anomaly && notes) {
                std::ostringstream msg;
                msg << "novel trait discovered: ";
                for (std::size_t i = 0; i < r.anomalous_labels.size(); ++i) {
                    if (i) msg << ", ";
                    msg << r.anomalous_labels[i];
                }
                notes->push_back(msg.str());
            }
        } else {
            throw UnknownDesignError("ingest: unknown design id " + r.experiment);
        }
    }
    return next;
}

namespace {

RunTranscript run_loop(const genetics::WorldConfig& world, int max_cycles,
                       const EngineOptions& opts, ResearchPath path) {
    RunTranscript transcript;
    transcript.seed = world.rng_seed;
    transcript.path = path;

    std::optional<std::string> alt_proposal;
    if (path == ResearchPath::PuUndilutable) alt_proposal = kPuUndilutable;
    if (path == ResearchPath::SpeciesHybrid) alt_proposal = kSpeciesHybrid;

    const Rng master(world.rng_seed);
    BeliefState belief = BeliefState::initial();
    bool converged = false;

    for (int i = 1; i <= max_cycles; ++i) {
        PlanningCycle cycle = evaluate_cycle(belief, opts);
        cycle.index = i;
        if (cycle.scores.front().score_bits <= opts.stop_threshold) {
            converged = true;
            break;
        }
        for (const auto& id : cycle.chosen) {
            std::ostringstream label;
            label << "cycle-" << i << '/' << id;
            Rng design_rng = master.fork(label.str());
            auto sample = genetics::run_design(id, world, design_rng);
            cycle.observed.push_back(summarize_result(id, sample, world));
            cycle.samples.push_back(std::move(sample));
        }
        cycle.belief_after = ingest(belief, cycle.observed, opts, &cycle.notes, alt_proposal);
        belief = cycle.belief_after;
        transcript.cycles.push_back(std::move(cycle));

        // Alternative paths end once the wrong model is rejected and the
        // hidden-signal model has entered play.
        if (alt_proposal && belief.resolved.count(*alt_proposal) &&
            belief.proposed_models.count(kTransmission)) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw MaxCyclesExceededError("planning loop did not converge within " +
                                     std::to_string(max_cycles) + " cycles");
    }
    transcript.final_belief = belief;
    return transcript;
}

}  // namespace

RunTranscript run_sequence(const genetics::WorldConfig& world, int max_cycles,
                           const EngineOptions& opts) {
    return run_loop(world, max_cycles, opts, ResearchPath::Canonical);
}

RunTranscript alternative_path(ResearchPath path, const genetics::WorldConfig& world,
                               int max_cycles, const EngineOptions& opts) {
    return run_loop(world, max_cycles, opts, path);
}

}  // namespace robomendel::engine
