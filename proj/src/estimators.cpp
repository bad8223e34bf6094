#include "robomendel/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace robomendel {

namespace {

bool parse_double(const std::string& token, double& out) {
    if (token.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stod(token, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == token.size();
}

double sample_mean(const std::vector<double>& xs) {
    return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

}  // namespace

ObservationSample ObservationSample::of_labels(std::vector<std::string> labels,
                                               std::vector<std::string> tags) {
    if (!tags.empty() && tags.size() != labels.size()) {
        throw InvalidArgumentError("tags must align with observations");
    }
    ObservationSample s;
    s.discrete_ = true;
    s.labels_ = std::move(labels);
    s.tags_ = std::move(tags);
    return s;
}

ObservationSample ObservationSample::of_values(std::vector<double> values,
                                               std::vector<std::string> tags) {
    if (!tags.empty() && tags.size() != values.size()) {
        throw InvalidArgumentError("tags must align with observations");
    }
    ObservationSample s;
    s.discrete_ = false;
    s.values_ = std::move(values);
    s.tags_ = std::move(tags);
    return s;
}

ObservationSample ObservationSample::load(std::istream& in) {
    std::vector<std::string> tokens;
    std::vector<std::string> tags;
    bool any_tag = false;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            tokens.push_back(line);
            tags.emplace_back();
        } else {
            tokens.push_back(line.substr(0, tab));
            tags.push_back(line.substr(tab + 1));
            any_tag = true;
        }
    }
    if (!any_tag) tags.clear();

    std::vector<double> values;
    values.reserve(tokens.size());
    bool all_numeric = !tokens.empty();
    for (const auto& t : tokens) {
        double v = 0.0;
        if (!parse_double(t, v)) {
            all_numeric = false;
            break;
        }
        values.push_back(v);
    }
    if (all_numeric) return of_values(std::move(values), std::move(tags));
    return of_labels(std::move(tokens), std::move(tags));
}

void ObservationSample::save(std::ostream& out) const {
    out.precision(17);
    for (std::size_t i = 0; i < size(); ++i) {
        if (discrete_) {
            out << labels_[i];
        } else {
            out << values_[i];
        }
        if (!tags_.empty() && !tags_[i].empty()) out << '\t' << tags_[i];
        out << '\n';
    }
}

const std::vector<std::string>& ObservationSample::labels() const {
    if (!discrete_) throw InvalidArgumentError("sample holds trait values, not labels");
    return labels_;
}

const std::vector<double>& ObservationSample::values() const {
    if (discrete_) throw InvalidArgumentError("sample holds labels, not trait values");
    return values_;
}

Observation ObservationSample::observation(std::size_t i) const {
    if (discrete_) return Observation(labels_.at(i));
    return Observation(values_.at(i));
}

double empirical_log_likelihood(const ObservationSample& sample, const OutcomeModel& model) {
    if (sample.empty()) throw InvalidArgumentError("cannot estimate from an empty sample");
    double total = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const auto obs = sample.observation(i);
        const double lik = model.likelihood(obs);
        if (!(lik > 0.0)) {
            throw ZeroLikelihoodError("model assigns zero likelihood to observation " +
                                      std::to_string(i) + " (" + observation_to_string(obs) + ")");
        }
        total += std::log2(lik);
    }
    return total / static_cast<double>(sample.size());
}

double empirical_entropy(const ObservationSample& sample) {
    if (sample.empty()) throw InvalidArgumentError("cannot estimate from an empty sample");
    if (sample.is_discrete()) {
        std::map<std::string, std::size_t> counts;
        for (const auto& l : sample.labels()) ++counts[l];
        const double n = static_cast<double>(sample.size());
        double h = 0.0;
        for (const auto& [label, c] : counts) {
            const double f = static_cast<double>(c) / n;
            h -= f * std::log2(f);
        }
        return std::max(h, 0.0);
    }
    const auto& xs = sample.values();
    if (xs.size() < 2) {
        throw InvalidArgumentError("continuous entropy estimate needs at least 2 observations");
    }
    const double mean = sample_mean(xs);
    double var = 0.0;
    for (const double x : xs) var += (x - mean) * (x - mean);
    var /= static_cast<double>(xs.size());
    if (!(var > 0.0)) {
        throw DegenerateSampleError("continuous sample has zero variance");
    }
    return gaussian_entropy(std::sqrt(var));
}

double empirical_information(const ObservationSample& sample, const OutcomeModel& model,
                             const OutcomeModel& baseline) {
    return empirical_log_likelihood(sample, model) - empirical_log_likelihood(sample, baseline);
}

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw InvalidArgumentError("quantile level must be in (0,1)");
    // Acklam's rational approximation, then one Halley refinement via erfc.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double x;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    // Halley refinement: F(x) - p via erfc.
    const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    const double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
    x = x - u / (1.0 + x * u / 2.0);
    return x;
}

IpEstimate potential_information(const ObservationSample& sample, const OutcomeModel& model,
                                 double confidence) {
    if (!(confidence > 0.0 && confidence < 1.0)) {
        throw InvalidArgumentError("confidence must be in (0,1)");
    }
    const double he = empirical_entropy(sample);
    IpEstimate est;
    est.confidence = confidence;
    est.per_observation.reserve(sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const auto obs = sample.observation(i);
        const double lik = model.likelihood(obs);
        if (!(lik > 0.0)) {
            throw ZeroLikelihoodError("model assigns zero likelihood to observation " +
                                      std::to_string(i) + " (" + observation_to_string(obs) + ")");
        }
        est.per_observation.push_back(-std::log2(lik) - he);
    }
    const double n = static_cast<double>(est.per_observation.size());
    est.mean = std::accumulate(est.per_observation.begin(), est.per_observation.end(), 0.0) / n;
    if (est.per_observation.size() < 2) {
        est.lower_bound = -std::numeric_limits<double>::infinity();
        return est;
    }
    double ss = 0.0;
    for (const double v : est.per_observation) ss += (v - est.mean) * (v - est.mean);
    const double sd = std::sqrt(ss / (n - 1.0));
    const double se = sd / std::sqrt(n);
    est.lower_bound = est.mean - normal_quantile(confidence) * se;
    return est;
}

std::vector<std::size_t> localize(const IpEstimate& est, std::size_t k) {
    if (k > est.per_observation.size()) {
        throw InvalidArgumentError("localize: k exceeds sample size");
    }
    std::vector<std::size_t> idx(est.per_observation.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return est.per_observation[a] > est.per_observation[b];
    });
    idx.resize(k);
    return idx;
}

}  // namespace robomendel
