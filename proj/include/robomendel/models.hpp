#pragma once
// Observations and outcome models. An Observation is either a discrete label
// or a real trait value; an OutcomeModel assigns it a likelihood (probability
// for labels, density for trait values).

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "robomendel/infocore.hpp"

namespace robomendel {

using Observation = std::variant<std::string, double>;

inline bool is_label(const Observation& o) { return std::holds_alternative<std::string>(o); }

std::string observation_to_string(const Observation& o);

class OutcomeModel {
public:
    static OutcomeModel discrete(DiscreteDistribution d);
    static OutcomeModel gaussian(GaussianTraitModel g);
    // Weighted Gaussian mixture over one trait axis; weights must sum to 1.
    static OutcomeModel gaussian_mixture(std::vector<std::pair<double, GaussianTraitModel>> parts);
    static OutcomeModel custom(std::function<double(const Observation&)> fn);
    // Likelihood 1 for every observation; handy for weight-only mixtures.
    static OutcomeModel flat();

    double likelihood(const Observation& o) const { return fn_(o); }

private:
    explicit OutcomeModel(std::function<double(const Observation&)> fn) : fn_(std::move(fn)) {}
    std::function<double(const Observation&)> fn_;
};

}  // namespace robomendel
