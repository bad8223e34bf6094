#pragma once
// Expectation potential information and everything built on it: replicate
// yield curves over a sufficient statistic, disambiguation, technical-failure
// analysis, control information, targeted weighting and cost efficiency.

#include <set>
#include <string>
#include <vector>

#include "robomendel/infocore.hpp"
#include "robomendel/mixtures.hpp"

namespace robomendel {

enum class SufficientStatistic { FullSequence, Counts };

// A candidate experiment: per-hypothesis outcome distributions over a shared
// per-replicate outcome space, a replicate count, and costs.
struct ExperimentDesign {
    std::string id;
    OutcomeSpace space;
    std::vector<std::pair<std::string, DiscreteDistribution>> hypothesis_outcomes;
    int replicates = 1;
    SufficientStatistic statistic = SufficientStatistic::Counts;
    std::set<std::string> controls;
    double setup_cost = 0.0;
    double replicate_cost = 1.0;

    ExperimentDesign(std::string id_, OutcomeSpace space_,
                     std::vector<std::pair<std::string, DiscreteDistribution>> outcomes,
                     int replicates_ = 1,
                     SufficientStatistic statistic_ = SufficientStatistic::Counts);

    double total_cost() const { return setup_cost + replicates * replicate_cost; }
    const DiscreteDistribution& outcome_for(std::string_view model_id) const;
};

// E(Ip) yield as a function of the replicate count.
struct YieldCurve {
    std::vector<std::pair<int, double>> points;  // (n, E(Ip) bits), n increasing
    std::vector<double> rates;                   // first differences, rates[0] = points[0]
    double capacity = 0.0;                       // value at n_max

    // CSV with header: n,e_ip_bits,rate_bits_per_replicate (full precision).
    std::string to_csv() const;
};

// E(Ip) = sum_i w_i D(omega_i^n || psi_PL^n) with the n-replicate
// distributions reduced to the chosen sufficient statistic. Result is >= 0
// and <= entropy(weights). Mixture components align with the design's
// hypothesis outcomes by model id.
double expectation_ip(const ExperimentDesign& design, const HypothesisMixture& m);

// Same sum restricted to the target components (the weighted terms for
// hypotheses whose outcomes exemplify the phenomenon of interest); psi_PL
// still mixes every component.
double expectation_ip_targeted(const ExperimentDesign& design, const HypothesisMixture& m,
                               const std::set<std::string>& target_ids);

// Entropy of the mixture weights: the E(Ip) of any design whose hypothesis
// outcome supports are pairwise disjoint.
double disambiguation_value(const HypothesisMixture& m);
double disambiguation_value(std::span<const double> weights);

// E(Ip) at each n in 1..n_max.
YieldCurve yield_curve(const ExperimentDesign& design, const HypothesisMixture& m, int n_max);

// Mutual information of the technical-failure joint for a boolean hypothesis
// with prior alpha and per-design failure probability f. With a positive
// control the result is exactly (1-f) * H(alpha).
double technical_failure_mi(double alpha, double f, bool with_control);

// E(Ip) rescued by the positive control: with-control minus without.
double control_information(double alpha, double f);

// Targeted metric: tau * E(Ip).
double targeted_ip(double e_ip, double tau);

// Targeted yield of the heritability test under an environmental confound of
// per-plot probability p_env. Without control the n-replicate yield is
// p_heritable * log2(1 / (p_heritable + (1-p_heritable) p_env^n)); the
// paired control disambiguates at n = 1.
YieldCurve env_factor_curve(double p_env, double p_heritable, bool with_control, int n_max);

// Bits per cost unit: e_ip / (c_s + n * c_r).
double efficiency(double e_ip, const ExperimentDesign& design);

}  // namespace robomendel
