#include "robomendel/infocore.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

namespace robomendel {

namespace {

constexpr double kSumTolerance = 1e-12;

void check_probability_vector(std::span<const double> probs) {
    double total = 0.0;
    for (const double p : probs) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw InvalidArgumentError("probability outside [0,1]: " + std::to_string(p));
        }
        total += p;
    }
    if (std::abs(total - 1.0) > kSumTolerance) {
        std::ostringstream msg;
        msg << "probabilities sum to " << total << ", expected 1 within 1e-12";
        throw InvalidArgumentError(msg.str());
    }
}

}  // namespace

OutcomeSpace::OutcomeSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw InvalidArgumentError("outcome space must be non-empty");
    std::set<std::string_view> seen;
    for (const auto& l : labels_) {
        if (!seen.insert(l).second) {
            throw InvalidArgumentError("duplicate outcome label: " + l);
        }
    }
}

std::optional<std::size_t> OutcomeSpace::find(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return i;
    }
    return std::nullopt;
}

std::size_t OutcomeSpace::index_of(std::string_view label) const {
    if (const auto i = find(label)) return *i;
    throw InvalidArgumentError("unknown outcome label: " + std::string(label));
}

DiscreteDistribution::DiscreteDistribution(OutcomeSpace space, std::vector<double> probs)
    : space_(std::move(space)), probs_(std::move(probs)) {
    if (probs_.size() != space_.size()) {
        throw InvalidArgumentError("probability vector length does not match outcome space");
    }
    check_probability_vector(probs_);
}

DiscreteDistribution DiscreteDistribution::point_mass(OutcomeSpace space, std::string_view label) {
    std::vector<double> p(space.size(), 0.0);
    p[space.index_of(label)] = 1.0;
    return DiscreteDistribution(std::move(space), std::move(p));
}

DiscreteDistribution DiscreteDistribution::uniform(OutcomeSpace space) {
    std::vector<double> p(space.size(), 1.0 / static_cast<double>(space.size()));
    return DiscreteDistribution(std::move(space), std::move(p));
}

GaussianTraitModel::GaussianTraitModel(double mean_, double sd_) : mean(mean_), sd(sd_) {
    if (!(sd > 0.0)) throw InvalidArgumentError("Gaussian trait model requires sd > 0");
}

double GaussianTraitModel::pdf(double x) const {
    const double z = (x - mean) / sd;
    return std::exp(-0.5 * z * z) / (sd * std::sqrt(2.0 * M_PI));
}

double GaussianTraitModel::log2_pdf(double x) const {
    const double z = (x - mean) / sd;
    return (-0.5 * z * z - std::log(sd) - 0.5 * std::log(2.0 * M_PI)) / std::numbers::ln2;
}

JointDistribution::JointDistribution(OutcomeSpace row_space, OutcomeSpace col_space,
                                     std::vector<std::vector<double>> probs)
    : rows_(std::move(row_space)), cols_(std::move(col_space)), probs_(std::move(probs)) {
    if (probs_.size() != rows_.size()) {
        throw InvalidArgumentError("joint distribution row count mismatch");
    }
    double total = 0.0;
    for (const auto& row : probs_) {
        if (row.size() != cols_.size()) {
            throw InvalidArgumentError("joint distribution column count mismatch");
        }
        for (const double p : row) {
            if (!(p >= 0.0)) throw InvalidArgumentError("joint probability must be >= 0");
            total += p;
        }
    }
    if (std::abs(total - 1.0) > kSumTolerance) {
        throw InvalidArgumentError("joint probabilities must sum to 1 within 1e-12");
    }
}

DiscreteDistribution JointDistribution::row_marginal() const {
    std::vector<double> m(rows_.size(), 0.0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        m[i] = std::accumulate(probs_[i].begin(), probs_[i].end(), 0.0);
    }
    return DiscreteDistribution(rows_, std::move(m));
}

DiscreteDistribution JointDistribution::col_marginal() const {
    std::vector<double> m(cols_.size(), 0.0);
    for (std::size_t j = 0; j < cols_.size(); ++j) {
        for (std::size_t i = 0; i < rows_.size(); ++i) m[j] += probs_[i][j];
    }
    return DiscreteDistribution(cols_, std::move(m));
}

double entropy_bits(std::span<const double> probs) {
    double h = 0.0;
    for (const double p : probs) {
        if (p > 0.0) h -= p * std::log2(p);
    }
    return std::max(h, 0.0);
}

double entropy(const DiscreteDistribution& d) { return entropy_bits(d.probs()); }

double binary_entropy(double p) {
    const double q[2] = {p, 1.0 - p};
    return entropy_bits(q);
}

double relative_entropy_bits(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw InvalidArgumentError("relative entropy requires a shared outcome space");
    }
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) continue;
        if (q[i] == 0.0) {
            throw AbsoluteContinuityError(
                "reference distribution assigns zero probability to outcome " + std::to_string(i) +
                " carrying mass " + std::to_string(p[i]));
        }
        d += p[i] * std::log2(p[i] / q[i]);
    }
    return std::max(d, 0.0);
}

double relative_entropy(const DiscreteDistribution& p, const DiscreteDistribution& q) {
    if (!(p.space() == q.space())) {
        throw InvalidArgumentError("relative entropy requires a shared outcome space");
    }
    return relative_entropy_bits(p.probs(), q.probs());
}

double mutual_information(const JointDistribution& j) {
    const auto rows = j.row_marginal();
    const auto cols = j.col_marginal();
    double mi = 0.0;
    for (std::size_t r = 0; r < j.row_space().size(); ++r) {
        for (std::size_t c = 0; c < j.col_space().size(); ++c) {
            const double p = j.prob(r, c);
            if (p > 0.0) mi += p * std::log2(p / (rows.prob(r) * cols.prob(c)));
        }
    }
    return std::max(mi, 0.0);
}

double gaussian_entropy(double sd) {
    if (!(sd > 0.0)) throw InvalidArgumentError("Gaussian entropy requires sd > 0");
    return 0.5 * std::log2(2.0 * M_PI * std::numbers::e * sd * sd);
}

double gaussian_entropy(const GaussianTraitModel& g) { return gaussian_entropy(g.sd); }

}  // namespace robomendel
