#include "robomendel/models.hpp"

#include <cmath>
#include <sstream>

namespace robomendel {

std::string observation_to_string(const Observation& o) {
    if (is_label(o)) return std::get<std::string>(o);
    std::ostringstream s;
    s << std::get<double>(o);
    return s.str();
}

OutcomeModel OutcomeModel::discrete(DiscreteDistribution d) {
    auto shared = std::make_shared<DiscreteDistribution>(std::move(d));
    return OutcomeModel([shared](const Observation& o) -> double {
        if (!is_label(o)) return 0.0;
        const auto idx = shared->space().find(std::get<std::string>(o));
        return idx ? shared->prob(*idx) : 0.0;
    });
}

OutcomeModel OutcomeModel::gaussian(GaussianTraitModel g) {
    return OutcomeModel([g](const Observation& o) -> double {
        return is_label(o) ? 0.0 : g.pdf(std::get<double>(o));
    });
}

OutcomeModel OutcomeModel::gaussian_mixture(std::vector<std::pair<double, GaussianTraitModel>> parts) {
    double total = 0.0;
    for (const auto& [w, g] : parts) {
        if (!(w >= 0.0)) throw InvalidArgumentError("mixture weight must be >= 0");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw InvalidArgumentError("Gaussian mixture weights must sum to 1");
    }
    return OutcomeModel([parts = std::move(parts)](const Observation& o) -> double {
        if (is_label(o)) return 0.0;
        const double x = std::get<double>(o);
        double p = 0.0;
        for (const auto& [w, g] : parts) p += w * g.pdf(x);
        return p;
    });
}

OutcomeModel OutcomeModel::custom(std::function<double(const Observation&)> fn) {
    return OutcomeModel(std::move(fn));
}

OutcomeModel OutcomeModel::flat() {
    return OutcomeModel([](const Observation&) { return 1.0; });
}

}  // namespace robomendel
