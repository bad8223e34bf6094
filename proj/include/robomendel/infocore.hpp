#pragma once
// Exact information-theoretic primitives over finite discrete distributions
// and unit-variance Gaussian trait models. Everything downstream (estimators,
// planner scores, yield curves) reduces to these functions.
//
// All logarithms are base 2; every public value is in bits.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "robomendel/errors.hpp"

namespace robomendel {

// Ordered alphabet of outcome labels. The ordering is stable and defines
// vector indexing for every distribution built over the space.
class OutcomeSpace {
public:
    explicit OutcomeSpace(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    std::optional<std::size_t> find(std::string_view label) const;
    std::size_t index_of(std::string_view label) const;  // throws InvalidArgumentError

    bool operator==(const OutcomeSpace& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
};

// Probability vector aligned with an OutcomeSpace. Validated on construction:
// entries in [0,1], total within 1e-12 of 1.
class DiscreteDistribution {
public:
    DiscreteDistribution(OutcomeSpace space, std::vector<double> probs);

    static DiscreteDistribution point_mass(OutcomeSpace space, std::string_view label);
    static DiscreteDistribution uniform(OutcomeSpace space);

    const OutcomeSpace& space() const { return space_; }
    std::span<const double> probs() const { return probs_; }
    double prob(std::size_t i) const { return probs_.at(i); }
    double prob(std::string_view label) const { return probs_.at(space_.index_of(label)); }
    std::size_t size() const { return probs_.size(); }

private:
    OutcomeSpace space_;
    std::vector<double> probs_;
};

// Gaussian model of one continuous trait axis. sd must be positive.
struct GaussianTraitModel {
    double mean = 0.0;
    double sd = 1.0;

    GaussianTraitModel(double mean_, double sd_);
    GaussianTraitModel() = default;

    double pdf(double x) const;
    double log2_pdf(double x) const;
};

// Joint distribution of a hidden row variable and an observable column
// variable. Entries are non-negative and sum to 1 within 1e-12.
class JointDistribution {
public:
    JointDistribution(OutcomeSpace row_space, OutcomeSpace col_space,
                      std::vector<std::vector<double>> probs);

    const OutcomeSpace& row_space() const { return rows_; }
    const OutcomeSpace& col_space() const { return cols_; }
    double prob(std::size_t i, std::size_t j) const { return probs_.at(i).at(j); }

    DiscreteDistribution row_marginal() const;
    DiscreteDistribution col_marginal() const;

private:
    OutcomeSpace rows_;
    OutcomeSpace cols_;
    std::vector<std::vector<double>> probs_;
};

// H(d) = -sum p log2 p, with 0 log 0 := 0. Result clamped to >= 0.
double entropy(const DiscreteDistribution& d);

// Entropy of a raw probability vector (no space needed).
double entropy_bits(std::span<const double> probs);

// Binary entropy H(p, 1-p).
double binary_entropy(double p);

// D(p || q) = sum p log2(p/q). Throws AbsoluteContinuityError when p puts
// mass on an outcome q declares impossible.
double relative_entropy(const DiscreteDistribution& p, const DiscreteDistribution& q);
double relative_entropy_bits(std::span<const double> p, std::span<const double> q);

// I(rows; cols) of a joint distribution.
double mutual_information(const JointDistribution& j);

// Differential entropy of a Gaussian: 1/2 log2(2 pi e sd^2).
double gaussian_entropy(const GaussianTraitModel& g);
double gaussian_entropy(double sd);

}  // namespace robomendel
