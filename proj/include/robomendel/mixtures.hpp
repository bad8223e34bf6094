#pragma once
// De Finetti mixture machinery: posterior likelihood, Bayesian weight
// updating over exchangeable observations, and the weighting schemes used to
// seed new model proposals (empirical posterior, uninformative prior,
// explicit caller-supplied prior).

#include <span>
#include <string>
#include <vector>

#include "robomendel/models.hpp"

namespace robomendel {

struct MixtureComponent {
    std::string id;
    OutcomeModel model;
};

// Immutable weighted mixture of named component models. Updates return new
// mixtures; weights always sum to 1 within 1e-12.
class HypothesisMixture {
public:
    HypothesisMixture(std::vector<MixtureComponent> components, std::vector<double> weights);

    std::size_t size() const { return components_.size(); }
    const std::vector<MixtureComponent>& components() const { return components_; }
    std::span<const double> weights() const { return weights_; }
    double weight(std::string_view id) const;
    std::vector<std::string> ids() const;

private:
    std::vector<MixtureComponent> components_;
    std::vector<double> weights_;
};

// psi_PL(x) = sum_i w_i * likelihood_i(x).
double posterior_likelihood(const HypothesisMixture& m, const Observation& outcome);

// w_i' = w_i * likelihood_i(outcome) / psi_PL(outcome). Throws
// ImpossibleOutcomeError when every component assigns zero.
HypothesisMixture bayes_update(const HypothesisMixture& m, const Observation& outcome);
HypothesisMixture bayes_update(const HypothesisMixture& m, std::span<const Observation> outcomes);

// Equal weights over >= 2 components.
HypothesisMixture uninformative_mixture(std::vector<MixtureComponent> components);

// Explicit caller-supplied prior (the "arbitrary proposal" scheme; no
// complexity penalty is computed).
HypothesisMixture mixture_with_prior(std::vector<MixtureComponent> components,
                                     std::vector<double> prior);

// Append-only record of categorized observations: which model's prediction
// each historical observation exemplified.
class ObservationHistory {
public:
    struct Record {
        std::string category;  // the model id the observation is attributed to
        std::string outcome;
        std::string experiment_id;
    };

    void record(std::string category, std::string outcome, std::string experiment_id = {});
    const std::vector<Record>& records() const { return records_; }
    std::size_t count(std::string_view category) const;
    bool empty() const { return records_.empty(); }

private:
    std::vector<Record> records_;
};

// Laplace-smoothed frequencies (count_i + 1) / (n + k). An empty history
// recovers the uninformative prior. Throws UnattributableRecordError if a
// record's category matches no component.
HypothesisMixture empirical_posterior(std::vector<MixtureComponent> components,
                                      const ObservationHistory& history);
std::vector<double> empirical_weights(std::span<const std::string> model_ids,
                                      const ObservationHistory& history);

}  // namespace robomendel
