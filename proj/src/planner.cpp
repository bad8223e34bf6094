#include "robomendel/planner.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace robomendel {

namespace {

constexpr std::size_t kMaxSequenceStates = 1000000;

// Count vectors (k_1..k_m) with sum n, in lexicographic order.
std::vector<std::vector<int>> enumerate_counts(int n, std::size_t m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(m, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t cell, int remaining) {
        if (cell == m - 1) {
            cur[cell] = remaining;
            out.push_back(cur);
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            cur[cell] = k;
            rec(cell + 1, remaining - k);
        }
    };
    rec(0, n);
    return out;
}

double log_multinomial_coefficient(int n, const std::vector<int>& counts) {
    double v = std::lgamma(n + 1.0);
    for (const int k : counts) v -= std::lgamma(k + 1.0);
    return v;
}

// P(counts | per-replicate distribution), multinomial. Exact for point-mass
// distributions (log terms vanish), which keeps disambiguation scores exact.
double multinomial_prob(const std::vector<int>& counts, std::span<const double> p, int n) {
    double logp = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (counts[i] == 0) continue;
        if (p[i] == 0.0) return 0.0;
        if (p[i] == 1.0) continue;
        logp += counts[i] * std::log(p[i]);
    }
    if (logp == 0.0) return 1.0;  // all mass on cells with p = 1
    return std::exp(log_multinomial_coefficient(n, counts) + logp);
}

// Per-hypothesis distributions over the replicate statistic, one row per
// hypothesis, plus psi_PL as the weight-mixed row.
struct StatisticTable {
    std::vector<std::vector<double>> hypothesis_rows;
    std::vector<double> mixture_row;
};

StatisticTable build_statistic_table(const ExperimentDesign& design, int n,
                                     std::span<const double> weights,
                                     SufficientStatistic statistic) {
    const std::size_t m = design.space.size();
    StatisticTable table;
    if (statistic == SufficientStatistic::Counts) {
        const auto states = enumerate_counts(n, m);
        table.hypothesis_rows.resize(design.hypothesis_outcomes.size());
        for (std::size_t h = 0; h < design.hypothesis_outcomes.size(); ++h) {
            const auto p = design.hypothesis_outcomes[h].second.probs();
            auto& row = table.hypothesis_rows[h];
            row.reserve(states.size());
            for (const auto& counts : states) row.push_back(multinomial_prob(counts, p, n));
        }
    } else {
        double states_d = 1.0;
        for (int i = 0; i < n; ++i) states_d *= static_cast<double>(m);
        if (states_d > static_cast<double>(kMaxSequenceStates)) {
            std::ostringstream msg;
            msg << "full-sequence statistic needs " << states_d << " states (cap "
                << kMaxSequenceStates << "); use the counts statistic";
            throw IntractableError(msg.str());
        }
        const std::size_t total = static_cast<std::size_t>(states_d);
        table.hypothesis_rows.assign(design.hypothesis_outcomes.size(),
                                     std::vector<double>(total, 1.0));
        for (std::size_t s = 0; s < total; ++s) {
            std::size_t rem = s;
            for (int pos = 0; pos < n; ++pos) {
                const std::size_t outcome = rem % m;
                rem /= m;
                for (std::size_t h = 0; h < design.hypothesis_outcomes.size(); ++h) {
                    table.hypothesis_rows[h][s] *=
                        design.hypothesis_outcomes[h].second.prob(outcome);
                }
            }
        }
    }
    const std::size_t states = table.hypothesis_rows.empty() ? 0 : table.hypothesis_rows[0].size();
    table.mixture_row.assign(states, 0.0);
    for (std::size_t h = 0; h < table.hypothesis_rows.size(); ++h) {
        for (std::size_t s = 0; s < states; ++s) {
            table.mixture_row[s] += weights[h] * table.hypothesis_rows[h][s];
        }
    }
    return table;
}

std::vector<double> aligned_weights(const ExperimentDesign& design, const HypothesisMixture& m) {
    if (m.size() != design.hypothesis_outcomes.size()) {
        throw InvalidArgumentError("mixture components do not align with design hypotheses");
    }
    std::vector<double> w;
    w.reserve(design.hypothesis_outcomes.size());
    for (const auto& [id, dist] : design.hypothesis_outcomes) w.push_back(m.weight(id));
    return w;
}

double expectation_over_components(const ExperimentDesign& design, const HypothesisMixture& m,
                                   int n, const std::set<std::string>* target_ids) {
    const auto weights = aligned_weights(design, m);
    const auto table = build_statistic_table(design, n, weights, design.statistic);
    double e = 0.0;
    for (std::size_t h = 0; h < table.hypothesis_rows.size(); ++h) {
        if (weights[h] == 0.0) continue;
        if (target_ids && !target_ids->count(design.hypothesis_outcomes[h].first)) continue;
        double d = 0.0;
        for (std::size_t s = 0; s < table.mixture_row.size(); ++s) {
            const double p = table.hypothesis_rows[h][s];
            if (p > 0.0) d += p * std::log2(p / table.mixture_row[s]);
        }
        e += weights[h] * std::max(d, 0.0);
    }
    return std::max(e, 0.0);
}

}  // namespace

ExperimentDesign::ExperimentDesign(
    std::string id_, OutcomeSpace space_,
    std::vector<std::pair<std::string, DiscreteDistribution>> outcomes, int replicates_,
    SufficientStatistic statistic_)
    : id(std::move(id_)),
      space(std::move(space_)),
      hypothesis_outcomes(std::move(outcomes)),
      replicates(replicates_),
      statistic(statistic_) {
    if (replicates < 1) throw InvalidArgumentError("design needs at least one replicate");
    if (setup_cost < 0.0 || replicate_cost < 0.0) {
        throw InvalidArgumentError("design costs must be >= 0");
    }
    for (const auto& [model_id, dist] : hypothesis_outcomes) {
        if (!(dist.space() == space)) {
            throw InvalidArgumentError("hypothesis '" + model_id +
                                       "' uses a different outcome space");
        }
    }
}

const DiscreteDistribution& ExperimentDesign::outcome_for(std::string_view model_id) const {
    for (const auto& [id_, dist] : hypothesis_outcomes) {
        if (id_ == model_id) return dist;
    }
    throw InvalidArgumentError("design has no hypothesis '" + std::string(model_id) + "'");
}

std::string YieldCurve::to_csv() const {
    std::ostringstream out;
    out.precision(17);
    out << "n,e_ip_bits,rate_bits_per_replicate\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        out << points[i].first << ',' << points[i].second << ',' << rates[i] << '\n';
    }
    return out.str();
}

double expectation_ip(const ExperimentDesign& design, const HypothesisMixture& m) {
    return expectation_over_components(design, m, design.replicates, nullptr);
}

double expectation_ip_targeted(const ExperimentDesign& design, const HypothesisMixture& m,
                               const std::set<std::string>& target_ids) {
    return expectation_over_components(design, m, design.replicates, &target_ids);
}

double disambiguation_value(std::span<const double> weights) { return entropy_bits(weights); }

double disambiguation_value(const HypothesisMixture& m) {
    return disambiguation_value(m.weights());
}

YieldCurve yield_curve(const ExperimentDesign& design, const HypothesisMixture& m, int n_max) {
    if (n_max < 1) throw InvalidArgumentError("yield curve needs n_max >= 1");
    YieldCurve curve;
    curve.points.reserve(n_max);
    curve.rates.reserve(n_max);
    double prev = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const double e = expectation_over_components(design, m, n, nullptr);
        curve.points.emplace_back(n, e);
        curve.rates.push_back(e - prev);
        prev = e;
    }
    curve.capacity = prev;
    return curve;
}

double technical_failure_mi(double alpha, double f, bool with_control) {
    if (!(alpha >= 0.0 && alpha <= 1.0 && f >= 0.0 && f <= 1.0)) {
        throw InvalidArgumentError("alpha and f must be probabilities");
    }
    OutcomeSpace rows({"hypothesis-true", "hypothesis-false"});
    if (with_control) {
        // Failure shows up in the control column, so the ambiguous cell
        // splits and the x-/c- state carries no information about the row.
        OutcomeSpace cols({"x+c+", "x-c+", "x-c-"});
        std::vector<std::vector<double>> joint = {
            {alpha * (1.0 - f), 0.0, alpha * f},
            {0.0, (1.0 - alpha) * (1.0 - f), (1.0 - alpha) * f},
        };
        return mutual_information(JointDistribution(rows, cols, joint));
    }
    OutcomeSpace cols({"x+", "x-"});
    std::vector<std::vector<double>> joint = {
        {alpha * (1.0 - f), alpha * f},
        {0.0, 1.0 - alpha},
    };
    return mutual_information(JointDistribution(rows, cols, joint));
}

double control_information(double alpha, double f) {
    const double gain =
        technical_failure_mi(alpha, f, true) - technical_failure_mi(alpha, f, false);
    return std::max(gain, 0.0);
}

double targeted_ip(double e_ip, double tau) {
    if (!(tau >= 0.0 && tau <= 1.0)) throw InvalidArgumentError("tau must be in [0,1]");
    return tau * e_ip;
}

YieldCurve env_factor_curve(double p_env, double p_heritable, bool with_control, int n_max) {
    if (!(p_env >= 0.0 && p_env <= 1.0 && p_heritable >= 0.0 && p_heritable <= 1.0)) {
        throw InvalidArgumentError("probabilities must be in [0,1]");
    }
    if (n_max < 1) throw InvalidArgumentError("yield curve needs n_max >= 1");

    const std::set<std::string> target = {"heritable"};
    YieldCurve curve;
    curve.points.reserve(n_max);
    curve.rates.reserve(n_max);
    double prev = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        ExperimentDesign design = [&] {
            if (with_control) {
                // Test and control seeds share the plot, so the environmental
                // flip hits both or neither.
                OutcomeSpace space({"test-wh-ctrl-pu", "test-wh-ctrl-wh", "test-pu-ctrl-pu"});
                ExperimentDesign d(
                    "wh-x-wh-control", space,
                    {{"heritable", DiscreteDistribution(space, {1.0, 0.0, 0.0})},
                     {"env-factor", DiscreteDistribution(space, {0.0, p_env, 1.0 - p_env})}},
                    n);
                d.controls = {"pu-x-pu"};
                return d;
            }
            OutcomeSpace space({"wh-child", "pu-child"});
            return ExperimentDesign(
                "wh-x-wh", space,
                {{"heritable", DiscreteDistribution(space, {1.0, 0.0})},
                 {"env-factor", DiscreteDistribution(space, {p_env, 1.0 - p_env})}},
                n);
        }();
        HypothesisMixture m({{"heritable", OutcomeModel::flat()}, {"env-factor", OutcomeModel::flat()}},
                            {p_heritable, 1.0 - p_heritable});
        const double e = expectation_ip_targeted(design, m, target);
        curve.points.emplace_back(n, e);
        curve.rates.push_back(e - prev);
        prev = e;
    }
    curve.capacity = prev;
    return curve;
}

double efficiency(double e_ip, const ExperimentDesign& design) {
    const double cost = design.total_cost();
    if (!(cost > 0.0)) throw ZeroCostError("design has zero total cost");
    return e_ip / cost;
}

}  // namespace robomendel
