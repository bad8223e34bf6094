#include "robomendel/mixtures.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace robomendel {

HypothesisMixture::HypothesisMixture(std::vector<MixtureComponent> components,
                                     std::vector<double> weights)
    : components_(std::move(components)), weights_(std::move(weights)) {
    if (components_.empty()) throw InvalidArgumentError("mixture needs at least one component");
    if (components_.size() != weights_.size()) {
        throw InvalidArgumentError("mixture weights must align with components");
    }
    std::set<std::string_view> ids;
    for (const auto& c : components_) {
        if (!ids.insert(c.id).second) {
            throw InvalidArgumentError("duplicate model id in mixture: " + c.id);
        }
    }
    double total = 0.0;
    for (const double w : weights_) {
        if (!(w >= 0.0 && w <= 1.0)) throw InvalidArgumentError("mixture weight outside [0,1]");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw InvalidArgumentError("mixture weights must sum to 1 within 1e-12");
    }
}

double HypothesisMixture::weight(std::string_view id) const {
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (components_[i].id == id) return weights_[i];
    }
    throw InvalidArgumentError("unknown model id in mixture: " + std::string(id));
}

std::vector<std::string> HypothesisMixture::ids() const {
    std::vector<std::string> out;
    out.reserve(components_.size());
    for (const auto& c : components_) out.push_back(c.id);
    return out;
}

double posterior_likelihood(const HypothesisMixture& m, const Observation& outcome) {
    double p = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        p += m.weights()[i] * m.components()[i].model.likelihood(outcome);
    }
    return p;
}

HypothesisMixture bayes_update(const HypothesisMixture& m, const Observation& outcome) {
    std::vector<double> posterior(m.size(), 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        posterior[i] = m.weights()[i] * m.components()[i].model.likelihood(outcome);
        total += posterior[i];
    }
    if (!(total > 0.0)) {
        throw ImpossibleOutcomeError("every mixture component assigns zero likelihood to " +
                                     observation_to_string(outcome));
    }
    for (double& w : posterior) w /= total;
    return HypothesisMixture(m.components(), std::move(posterior));
}

HypothesisMixture bayes_update(const HypothesisMixture& m, std::span<const Observation> outcomes) {
    HypothesisMixture cur = m;
    for (const auto& o : outcomes) cur = bayes_update(cur, o);
    return cur;
}

HypothesisMixture uninformative_mixture(std::vector<MixtureComponent> components) {
    if (components.size() < 2) {
        throw InvalidArgumentError("an uninformative prior needs at least 2 models");
    }
    std::vector<double> w(components.size(), 1.0 / static_cast<double>(components.size()));
    return HypothesisMixture(std::move(components), std::move(w));
}

HypothesisMixture mixture_with_prior(std::vector<MixtureComponent> components,
                                     std::vector<double> prior) {
    return HypothesisMixture(std::move(components), std::move(prior));
}

void ObservationHistory::record(std::string category, std::string outcome,
                                std::string experiment_id) {
    records_.push_back({std::move(category), std::move(outcome), std::move(experiment_id)});
}

std::size_t ObservationHistory::count(std::string_view category) const {
    return static_cast<std::size_t>(
        std::count_if(records_.begin(), records_.end(),
                      [&](const Record& r) { return r.category == category; }));
}

std::vector<double> empirical_weights(std::span<const std::string> model_ids,
                                      const ObservationHistory& history) {
    if (model_ids.empty()) throw InvalidArgumentError("empirical posterior needs model ids");
    for (const auto& r : history.records()) {
        if (std::find(model_ids.begin(), model_ids.end(), r.category) == model_ids.end()) {
            throw UnattributableRecordError("history record category '" + r.category +
                                            "' matches no model id");
        }
    }
    const double n = static_cast<double>(history.records().size());
    const double k = static_cast<double>(model_ids.size());
    std::vector<double> weights;
    weights.reserve(model_ids.size());
    for (const auto& id : model_ids) {
        weights.push_back((static_cast<double>(history.count(id)) + 1.0) / (n + k));
    }
    return weights;
}

HypothesisMixture empirical_posterior(std::vector<MixtureComponent> components,
                                      const ObservationHistory& history) {
    std::vector<std::string> ids;
    ids.reserve(components.size());
    for (const auto& c : components) ids.push_back(c.id);
    auto weights = empirical_weights(ids, history);
    return HypothesisMixture(std::move(components), std::move(weights));
}

}  // namespace robomendel
