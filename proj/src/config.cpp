#include "robomendel/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace robomendel {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError("config error at " + path + ": " + what);
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& path) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key)) fail(path + "/" + key, "unknown key");
    }
}

double get_probability(const json& obj, const std::string& key, double fallback,
                       const std::string& path) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number()) fail(path + "/" + key, "expected a number");
    const double p = v.get<double>();
    if (!(p >= 0.0 && p <= 1.0)) fail(path + "/" + key, "expected a probability in [0,1]");
    return p;
}

int get_positive_int(const json& obj, const std::string& key, int fallback,
                     const std::string& path) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) fail(path + "/" + key, "expected an integer");
    const int n = v.get<int>();
    if (n < 1) fail(path + "/" + key, "expected a positive integer");
    return n;
}

double get_number(const json& obj, const std::string& key, double fallback,
                  const std::string& path) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number()) fail(path + "/" + key, "expected a number");
    return v.get<double>();
}

OutcomeModel parse_model(const json& obj, const std::string& path) {
    if (!obj.is_object()) fail(path, "expected an object");
    if (!obj.contains("type")) fail(path, "missing model type");
    const std::string type = obj.at("type").get<std::string>();
    if (type == "gaussian") {
        reject_unknown_keys(obj, {"type", "mean", "sd"}, path);
        const double sd = get_number(obj, "sd", 1.0, path);
        if (!(sd > 0.0)) fail(path + "/sd", "sd must be > 0");
        return OutcomeModel::gaussian(GaussianTraitModel(get_number(obj, "mean", 0.0, path), sd));
    }
    if (type == "gaussian-mixture") {
        reject_unknown_keys(obj, {"type", "components"}, path);
        if (!obj.contains("components") || !obj.at("components").is_array()) {
            fail(path, "gaussian-mixture needs a components array");
        }
        std::vector<std::pair<double, GaussianTraitModel>> parts;
        std::size_t i = 0;
        for (const auto& part : obj.at("components")) {
            const std::string ppath = path + "/components/" + std::to_string(i++);
            reject_unknown_keys(part, {"weight", "mean", "sd"}, ppath);
            const double weight = get_probability(part, "weight", 0.0, ppath);
            const double mean = get_number(part, "mean", 0.0, ppath);
            const double sd = get_number(part, "sd", 1.0, ppath);
            if (!(sd > 0.0)) fail(ppath + "/sd", "sd must be > 0");
            parts.emplace_back(weight, GaussianTraitModel(mean, sd));
        }
        return OutcomeModel::gaussian_mixture(std::move(parts));
    }
    if (type == "discrete") {
        reject_unknown_keys(obj, {"type", "probs"}, path);
        if (!obj.contains("probs") || !obj.at("probs").is_object()) {
            fail(path, "discrete model needs a probs object");
        }
        std::vector<std::string> labels;
        std::vector<double> probs;
        for (const auto& [label, p] : obj.at("probs").items()) {
            labels.push_back(label);
            probs.push_back(p.get<double>());
        }
        try {
            return OutcomeModel::discrete(DiscreteDistribution(OutcomeSpace(labels), probs));
        } catch (const Error& e) {
            fail(path + "/probs", e.what());
        }
    }
    fail(path + "/type", "unknown model type '" + type + "'");
}

genetics::InheritanceModel parse_inheritance(const std::string& s, const std::string& path) {
    if (s == "LFLS") return genetics::InheritanceModel::LFLS;
    if (s == "one-parent") return genetics::InheritanceModel::OneParent;
    if (s == "transmission") return genetics::InheritanceModel::Transmission;
    fail(path, "unknown inheritance model '" + s + "'");
}

}  // namespace

ScenarioConfig ScenarioConfig::defaults() { return ScenarioConfig{}; }

ScenarioConfig ScenarioConfig::parse(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        // Convert the byte offset into a line number for the message.
        std::size_t line = 1;
        for (std::size_t i = 0; i < std::min(e.byte, text.size()); ++i) {
            if (text[i] == '\n') ++line;
        }
        throw ConfigError("config parse error at line " + std::to_string(line) + ": " + e.what());
    }
    if (!root.is_object()) throw ConfigError("config error at /: expected an object");
    reject_unknown_keys(root, {"world", "initial_beliefs", "planner", "models", "output_dir"}, "");

    ScenarioConfig cfg;
    if (root.contains("world")) {
        const auto& w = root.at("world");
        if (!w.is_object()) fail("/world", "expected an object");
        reject_unknown_keys(w,
                            {"inheritance_model", "p_bad_weather", "p_env_factor",
                             "seeds_per_cross", "rng_seed", "trait_dims"},
                            "/world");
        if (w.contains("inheritance_model")) {
            cfg.world.inheritance_model =
                parse_inheritance(w.at("inheritance_model").get<std::string>(),
                                  "/world/inheritance_model");
        }
        cfg.world.p_bad_weather =
            get_probability(w, "p_bad_weather", cfg.world.p_bad_weather, "/world");
        cfg.world.p_env_factor =
            get_probability(w, "p_env_factor", cfg.world.p_env_factor, "/world");
        cfg.world.seeds_per_cross =
            get_positive_int(w, "seeds_per_cross", cfg.world.seeds_per_cross, "/world");
        if (w.contains("rng_seed")) {
            if (!w.at("rng_seed").is_number_integer()) fail("/world/rng_seed", "expected an integer");
            cfg.world.rng_seed = w.at("rng_seed").get<std::uint64_t>();
        }
        cfg.world.trait_dims = get_positive_int(w, "trait_dims", cfg.world.trait_dims, "/world");
        if (cfg.world.trait_dims < static_cast<int>(cfg.world.loci.size())) {
            fail("/world/trait_dims", "needs at least one axis per locus");
        }
    }
    if (root.contains("initial_beliefs")) {
        const auto& beliefs = root.at("initial_beliefs");
        if (!beliefs.is_object()) fail("/initial_beliefs", "expected an object");
        const std::set<std::string> known = {
            engine::names::kLfls, engine::names::kWhHeritable, engine::names::kSameSpecies};
        for (const auto& [key, value] : beliefs.items()) {
            if (!known.count(key)) fail("/initial_beliefs/" + key, "unknown belief name");
            cfg.initial_beliefs[key] =
                get_probability(beliefs, key, 0.5, "/initial_beliefs");
        }
    }
    if (root.contains("planner")) {
        const auto& p = root.at("planner");
        if (!p.is_object()) fail("/planner", "expected an object");
        reject_unknown_keys(p,
                            {"replicates_per_design", "clamp_lo", "clamp_hi", "clamp",
                             "joint_selection_window", "stop_threshold", "max_cycles",
                             "wh_pu_confound", "divergence_window_sd"},
                            "/planner");
        auto& opts = cfg.planner;
        opts.replicates_per_design =
            get_positive_int(p, "replicates_per_design", opts.replicates_per_design, "/planner");
        opts.clamp_lo = get_probability(p, "clamp_lo", opts.clamp_lo, "/planner");
        opts.clamp_hi = get_probability(p, "clamp_hi", opts.clamp_hi, "/planner");
        if (!(opts.clamp_lo < opts.clamp_hi)) fail("/planner/clamp_lo", "clamp_lo must be < clamp_hi");
        if (p.contains("clamp")) {
            if (!p.at("clamp").is_boolean()) fail("/planner/clamp", "expected a boolean");
            opts.clamp = p.at("clamp").get<bool>();
        }
        opts.joint_selection_window =
            get_number(p, "joint_selection_window", opts.joint_selection_window, "/planner");
        if (opts.joint_selection_window < 0.0) {
            fail("/planner/joint_selection_window", "must be >= 0");
        }
        opts.stop_threshold = get_number(p, "stop_threshold", opts.stop_threshold, "/planner");
        opts.max_cycles = get_positive_int(p, "max_cycles", opts.max_cycles, "/planner");
        opts.wh_pu_confound = get_probability(p, "wh_pu_confound", opts.wh_pu_confound, "/planner");
        opts.divergence_window_sd =
            get_number(p, "divergence_window_sd", opts.divergence_window_sd, "/planner");
        if (!(opts.divergence_window_sd > 0.0)) {
            fail("/planner/divergence_window_sd", "must be > 0");
        }
    }
    if (root.contains("models")) {
        const auto& models = root.at("models");
        if (!models.is_object()) fail("/models", "expected an object");
        for (const auto& [name, spec] : models.items()) {
            cfg.models.emplace(name, parse_model(spec, "/models/" + name));
        }
    }
    if (root.contains("output_dir")) {
        if (!root.at("output_dir").is_string()) fail("/output_dir", "expected a string");
        cfg.output_dir = root.at("output_dir").get<std::string>();
    }
    return cfg;
}

ScenarioConfig ScenarioConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

const OutcomeModel& ScenarioConfig::model(const std::string& name) const {
    const auto it = models.find(name);
    if (it == models.end()) throw ConfigError("config defines no model named '" + name + "'");
    return it->second;
}

engine::BeliefState ScenarioConfig::initial_belief_state() const {
    auto b = engine::BeliefState::initial();
    for (const auto& [name, p] : initial_beliefs) {
        b.probabilities[name] = p;
        if (name == engine::names::kWhHeritable) b.tau["Wh"] = p;
    }
    return b;
}

}  // namespace robomendel
