#pragma once
// Sample-based estimators: empirical log-likelihood, empirical entropy,
// empirical information, and the potential-information estimator with mean,
// one-sided confident lower bound, and per-observation localization.
//
// Units: bits per observation throughout. Callers wanting sample totals
// multiply by the sample size (IpEstimate::total_mean does this).

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "robomendel/models.hpp"

namespace robomendel {

// A sample of observations, all labels or all trait values, with optional
// per-observation tags (plant id, replicate id).
class ObservationSample {
public:
    static ObservationSample of_labels(std::vector<std::string> labels,
                                       std::vector<std::string> tags = {});
    static ObservationSample of_values(std::vector<double> values,
                                       std::vector<std::string> tags = {});

    // Line-oriented text: one observation per line, optional tab-separated
    // tag. If every observation parses as a number the sample is continuous.
    static ObservationSample load(std::istream& in);
    void save(std::ostream& out) const;

    bool is_discrete() const { return discrete_; }
    std::size_t size() const { return discrete_ ? labels_.size() : values_.size(); }
    bool empty() const { return size() == 0; }

    const std::vector<std::string>& labels() const;
    const std::vector<double>& values() const;
    const std::vector<std::string>& tags() const { return tags_; }

    Observation observation(std::size_t i) const;

private:
    ObservationSample() = default;
    bool discrete_ = true;
    std::vector<std::string> labels_;
    std::vector<double> values_;
    std::vector<std::string> tags_;
};

// Result of the potential-information estimator.
struct IpEstimate {
    double mean = 0.0;                     // bits/observation
    double lower_bound = 0.0;              // one-sided confidence bound
    std::vector<double> per_observation;   // aligned with the sample
    double confidence = 0.95;

    std::size_t n() const { return per_observation.size(); }
    double total_mean() const { return mean * static_cast<double>(n()); }
    double total_lower_bound() const { return lower_bound * static_cast<double>(n()); }
};

// (1/n) sum log2 model(X_i). Throws ZeroLikelihoodError naming the first
// observation the model declares impossible.
double empirical_log_likelihood(const ObservationSample& sample, const OutcomeModel& model);

// Discrete samples: plug-in entropy of empirical frequencies. Continuous
// samples: Gaussian entropy of the variance-fitted Gaussian (n >= 2, and
// DegenerateSampleError on zero variance).
double empirical_entropy(const ObservationSample& sample);

// L_e(model) - L_e(baseline). Caller contract: evaluate on data held out
// from whatever fitting produced `model`.
double empirical_information(const ObservationSample& sample, const OutcomeModel& model,
                             const OutcomeModel& baseline);

// mean = -L_e - H_e; per-observation contributions use the whole-sample
// entropy estimate; lower bound = mean - z(confidence) * SE. A sample of one
// observation has no standard error, so its lower bound is -infinity.
IpEstimate potential_information(const ObservationSample& sample, const OutcomeModel& model,
                                 double confidence = 0.95);

// Top-k observation indices by per-observation Ip, descending, ties broken
// by ascending index.
std::vector<std::size_t> localize(const IpEstimate& est, std::size_t k);

// One-sided standard normal quantile (exposed for tests).
double normal_quantile(double p);

}  // namespace robomendel
