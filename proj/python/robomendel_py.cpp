// Python bindings for the main operations: the information primitives, the
// sample estimators, mixtures, planner scores and curves, the genetics
// simulator and the full planning loop.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "robomendel/config.hpp"
#include "robomendel/engine.hpp"
#include "robomendel/estimators.hpp"
#include "robomendel/transcript.hpp"

namespace py = pybind11;
using namespace robomendel;

namespace {

DiscreteDistribution dist_from(const std::vector<std::string>& labels,
                               const std::vector<double>& probs) {
    return DiscreteDistribution(OutcomeSpace(labels), probs);
}

ObservationSample sample_from(const py::object& observations) {
    std::vector<std::string> labels;
    std::vector<double> values;
    bool discrete = true, first = true;
    for (const auto& item : observations) {
        if (first) {
            discrete = py::isinstance<py::str>(item);
            first = false;
        }
        if (discrete) {
            labels.push_back(item.cast<std::string>());
        } else {
            values.push_back(item.cast<double>());
        }
    }
    return discrete ? ObservationSample::of_labels(std::move(labels))
                    : ObservationSample::of_values(std::move(values));
}

OutcomeModel model_from(const py::object& spec) {
    if (py::isinstance<py::dict>(spec)) {  // label -> probability table
        std::vector<std::string> labels;
        std::vector<double> probs;
        for (const auto& [k, v] : spec.cast<py::dict>()) {
            labels.push_back(k.cast<std::string>());
            probs.push_back(v.cast<double>());
        }
        return OutcomeModel::discrete(dist_from(labels, probs));
    }
    if (py::isinstance<py::tuple>(spec)) {  // (mean, sd) gaussian
        const auto t = spec.cast<std::pair<double, double>>();
        return OutcomeModel::gaussian(GaussianTraitModel(t.first, t.second));
    }
    throw InvalidArgumentError("model spec must be a dict of label probabilities or (mean, sd)");
}

HypothesisMixture mixture_from(const std::vector<std::string>& ids,
                               const std::vector<double>& weights) {
    std::vector<MixtureComponent> comps;
    for (const auto& id : ids) comps.push_back({id, OutcomeModel::flat()});
    return HypothesisMixture(std::move(comps), weights);
}

ExperimentDesign design_from(const std::string& id, const std::vector<std::string>& labels,
                             const std::map<std::string, std::vector<double>>& hypotheses, int n) {
    OutcomeSpace space(labels);
    std::vector<std::pair<std::string, DiscreteDistribution>> hyps;
    for (const auto& [model_id, probs] : hypotheses) {
        hyps.emplace_back(model_id, DiscreteDistribution(space, probs));
    }
    return ExperimentDesign(id, space, std::move(hyps), n);
}

}  // namespace

PYBIND11_MODULE(_robomendel, m) {
    m.doc() = "information-metric experiment planning over a simulated pea world";

    py::register_exception<Error>(m, "RobomendelError");

    // infocore
    m.def("entropy", [](const std::vector<double>& p) { return entropy_bits(p); },
          py::arg("probs"), "Shannon entropy in bits");
    m.def("relative_entropy",
          [](const std::vector<double>& p, const std::vector<double>& q) {
              return relative_entropy_bits(p, q);
          },
          py::arg("p"), py::arg("q"));
    m.def("mutual_information",
          [](const std::vector<std::vector<double>>& joint) {
              std::vector<std::string> rows, cols;
              for (std::size_t i = 0; i < joint.size(); ++i) rows.push_back("r" + std::to_string(i));
              for (std::size_t j = 0; j < joint.front().size(); ++j) {
                  cols.push_back("c" + std::to_string(j));
              }
              return mutual_information(
                  JointDistribution(OutcomeSpace(rows), OutcomeSpace(cols), joint));
          },
          py::arg("joint"));
    m.def("gaussian_entropy", [](double sd) { return gaussian_entropy(sd); }, py::arg("sd"));

    // estimators
    py::class_<IpEstimate>(m, "IpEstimate")
        .def_readonly("mean", &IpEstimate::mean)
        .def_readonly("lower_bound", &IpEstimate::lower_bound)
        .def_readonly("per_observation", &IpEstimate::per_observation)
        .def_readonly("confidence", &IpEstimate::confidence)
        .def_property_readonly("n", &IpEstimate::n)
        .def("total_mean", &IpEstimate::total_mean)
        .def("total_lower_bound", &IpEstimate::total_lower_bound);
    m.def("empirical_log_likelihood",
          [](const py::object& obs, const py::object& model) {
              return empirical_log_likelihood(sample_from(obs), model_from(model));
          },
          py::arg("observations"), py::arg("model"));
    m.def("empirical_entropy",
          [](const py::object& obs) { return empirical_entropy(sample_from(obs)); },
          py::arg("observations"));
    m.def("empirical_information",
          [](const py::object& obs, const py::object& model, const py::object& baseline) {
              return empirical_information(sample_from(obs), model_from(model),
                                           model_from(baseline));
          },
          py::arg("observations"), py::arg("model"), py::arg("baseline"));
    m.def("potential_information",
          [](const py::object& obs, const py::object& model, double confidence) {
              return potential_information(sample_from(obs), model_from(model), confidence);
          },
          py::arg("observations"), py::arg("model"), py::arg("confidence") = 0.95);
    m.def("localize",
          [](const IpEstimate& est, std::size_t k) { return localize(est, k); },
          py::arg("estimate"), py::arg("k"));

    // mixtures (weights by model id; updates via explicit likelihood tables)
    m.def("bayes_update",
          [](const std::vector<std::string>& ids, const std::vector<double>& weights,
             const std::vector<double>& likelihoods) {
              std::vector<MixtureComponent> comps;
              for (std::size_t i = 0; i < ids.size(); ++i) {
                  const double lik = likelihoods.at(i);
                  comps.push_back({ids[i], OutcomeModel::custom([lik](const Observation&) {
                                       return lik;
                                   })});
              }
              const auto updated = bayes_update(HypothesisMixture(comps, weights),
                                                Observation(std::string("observed")));
              return std::vector<double>(updated.weights().begin(), updated.weights().end());
          },
          py::arg("ids"), py::arg("weights"), py::arg("likelihoods"),
          "posterior weights after observing an outcome with the given per-model likelihoods");

    // planner
    m.def("expectation_ip",
          [](const std::vector<std::string>& labels,
             const std::map<std::string, std::vector<double>>& hypotheses,
             const std::map<std::string, double>& weights, int n) {
              std::vector<std::string> ids;
              std::vector<double> w;
              for (const auto& [id, weight] : weights) {
                  ids.push_back(id);
                  w.push_back(weight);
              }
              return expectation_ip(design_from("design", labels, hypotheses, n),
                                    mixture_from(ids, w));
          },
          py::arg("outcome_labels"), py::arg("hypothesis_outcomes"), py::arg("weights"),
          py::arg("replicates") = 1);
    m.def("disambiguation_value",
          [](const std::vector<double>& w) { return disambiguation_value(w); },
          py::arg("weights"));
    m.def("yield_curve",
          [](const std::vector<std::string>& labels,
             const std::map<std::string, std::vector<double>>& hypotheses,
             const std::map<std::string, double>& weights, int n_max) {
              std::vector<std::string> ids;
              std::vector<double> w;
              for (const auto& [id, weight] : weights) {
                  ids.push_back(id);
                  w.push_back(weight);
              }
              const auto curve = yield_curve(design_from("design", labels, hypotheses, 1),
                                             mixture_from(ids, w), n_max);
              return curve.points;
          },
          py::arg("outcome_labels"), py::arg("hypothesis_outcomes"), py::arg("weights"),
          py::arg("n_max"));
    m.def("technical_failure_mi", &technical_failure_mi, py::arg("alpha"), py::arg("f"),
          py::arg("with_control"));
    m.def("control_information", &control_information, py::arg("alpha"), py::arg("f"));
    m.def("targeted_ip", &targeted_ip, py::arg("e_ip"), py::arg("tau"));
    m.def("env_factor_curve",
          [](double p_env, double p_heritable, bool with_control, int n_max) {
              return env_factor_curve(p_env, p_heritable, with_control, n_max).points;
          },
          py::arg("p_env"), py::arg("p_heritable"), py::arg("with_control"), py::arg("n_max"));

    // genetics + planning loop
    m.def("run_design",
          [](const std::string& design_id, std::uint64_t seed) {
              auto world = genetics::WorldConfig::standard_pea_world();
              world.rng_seed = seed;
              Rng rng(seed);
              const auto sample = genetics::run_design(design_id, world, rng);
              return sample.empty() ? std::vector<std::string>{} : sample.labels();
          },
          py::arg("design_id"), py::arg("seed") = 20090131,
          "phenotype labels from one simulated run of a standard experiment");
    m.def("initial_scores", []() {
        const auto cycle = engine::evaluate_cycle(engine::BeliefState::initial(), {});
        std::vector<std::pair<std::string, double>> rows;
        for (const auto& row : cycle.scores) rows.emplace_back(row.experiment, row.score_bits);
        return rows;
    });
    m.def("run_sequence",
          [](std::uint64_t seed, const std::string& path, int max_cycles) {
              auto world = genetics::WorldConfig::standard_pea_world();
              world.rng_seed = seed;
              const auto research = engine::research_path_from_string(path);
              const auto t = research == engine::ResearchPath::Canonical
                                 ? engine::run_sequence(world, max_cycles)
                                 : engine::alternative_path(research, world, max_cycles);
              return engine::dump_transcript(t);
          },
          py::arg("seed") = 20090131, py::arg("path") = "canonical", py::arg("max_cycles") = 10,
          "full planning-loop transcript as a JSON string");
}
