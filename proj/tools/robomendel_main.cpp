// Command-line surface: `eval` prints the scored experiment table for a
// belief state, `curve` emits yield-curve CSVs, `run` executes the full
// planning loop against the simulated world, and `ip` scores an observation
// file against a named model.
//
// Exit codes: 0 success, 2 usage/config error, 3 runtime inconsistency.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "robomendel/config.hpp"
#include "robomendel/estimators.hpp"
#include "robomendel/transcript.hpp"

namespace {

using robomendel::ScenarioConfig;
namespace eng = robomendel::engine;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct CommonArgs {
    std::string config_path;
    std::optional<std::int64_t> seed;
    std::string out_dir;
    std::string format = "text";
};

ScenarioConfig load_config(const CommonArgs& args) {
    ScenarioConfig cfg =
        args.config_path.empty() ? ScenarioConfig::defaults() : ScenarioConfig::load(args.config_path);
    if (args.seed) cfg.world.rng_seed = static_cast<std::uint64_t>(*args.seed);
    if (!args.out_dir.empty()) cfg.output_dir = args.out_dir;
    return cfg;
}

void write_or_print(const std::string& out_dir, const std::string& filename,
                    const std::string& content) {
    if (out_dir.empty()) {
        std::cout << content;
        return;
    }
    std::filesystem::create_directories(out_dir);
    const auto path = std::filesystem::path(out_dir) / filename;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw robomendel::ConfigError("cannot write " + path.string());
    out << content;
    std::cerr << "wrote " << path.string() << "\n";
}

std::string format_score_table(const std::vector<eng::ScoreRow>& rows) {
    std::ostringstream out;
    out << "experiment            E(Ip) bits\n";
    for (const auto& row : rows) {
        out << std::left << std::setw(22) << row.experiment << std::fixed << std::setprecision(4)
            << row.score_bits << "\n";
    }
    return out.str();
}

int cmd_eval(const CommonArgs& args, const std::string& state_path) {
    const auto cfg = load_config(args);
    eng::BeliefState belief = cfg.initial_belief_state();
    if (!state_path.empty()) {
        std::ifstream in(state_path);
        if (!in) throw robomendel::ConfigError("cannot open state file: " + state_path);
        nlohmann::json j;
        try {
            in >> j;
            belief = eng::belief_from_json(j);
        } catch (const nlohmann::json::exception& e) {
            throw robomendel::ConfigError("bad state file " + state_path + ": " + e.what());
        }
    }
    const auto cycle = eng::evaluate_cycle(belief, cfg.planner);
    if (args.format == "json") {
        nlohmann::json j;
        j["scores"] = nlohmann::json::array();
        for (const auto& row : cycle.scores) j["scores"].push_back(eng::to_json(row));
        j["chosen"] = cycle.chosen;
        write_or_print(cfg.output_dir, "scores.json", j.dump(2) + "\n");
    } else {
        write_or_print(cfg.output_dir, "scores.txt", format_score_table(cycle.scores));
    }
    return kExitOk;
}

std::string csv_number(double v) {
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
}

int cmd_curve(const CommonArgs& args, const std::string& kind, double p, double alpha,
              double prior, int n_max, double step) {
    using namespace robomendel;
    std::ostringstream csv;
    csv.precision(17);
    if (kind == "tech-failure") {
        csv << "f,no_control_bits,with_control_bits,control_info_bits\n";
        for (double f = 0.0; f <= 1.0 + 1e-12; f += step) {
            const double fc = std::min(f, 1.0);
            const double without = technical_failure_mi(alpha, fc, false);
            const double with = technical_failure_mi(alpha, fc, true);
            csv << csv_number(fc) << ',' << csv_number(without) << ',' << csv_number(with) << ','
                << csv_number(with - without) << "\n";
        }
        write_or_print(load_config(args).output_dir, "tech_failure_curve.csv", csv.str());
        return kExitOk;
    }
    if (kind == "bad-weather") {
        OutcomeSpace grow_space({"progeny-grow", "no-growth"});
        ExperimentDesign no_control(
            "wh-x-pu", grow_space,
            {{"same-species", DiscreteDistribution(grow_space, {1.0 - p, p})},
             {"different-species", DiscreteDistribution(grow_space, {0.0, 1.0})}});
        OutcomeSpace ctrl_space({"x+c+", "x-c+", "x-c-"});
        ExperimentDesign with_control(
            "wh-x-pu-control", ctrl_space,
            {{"same-species", DiscreteDistribution(ctrl_space, {1.0 - p, 0.0, p})},
             {"different-species", DiscreteDistribution(ctrl_space, {0.0, 1.0 - p, p})}});
        with_control.replicate_cost = 2.0;  // the control seed doubles each replicate
        with_control.controls = {"pu-x-pu"};
        HypothesisMixture m({{"same-species", OutcomeModel::flat()},
                             {"different-species", OutcomeModel::flat()}},
                            {prior, 1.0 - prior});
        const auto base = yield_curve(no_control, m, n_max);
        const auto ctrl = yield_curve(with_control, m, n_max);
        csv << "n,no_control_bits,no_control_rate,with_control_bits,with_control_rate\n";
        for (int i = 0; i < n_max; ++i) {
            csv << base.points[i].first << ',' << csv_number(base.points[i].second) << ','
                << csv_number(base.rates[i]) << ',' << csv_number(ctrl.points[i].second) << ','
                << csv_number(ctrl.rates[i]) << "\n";
        }
        write_or_print(load_config(args).output_dir, "bad_weather_curve.csv", csv.str());
        return kExitOk;
    }
    if (kind == "env-factor") {
        const auto base = env_factor_curve(p, prior, false, n_max);
        const auto ctrl = env_factor_curve(p, prior, true, n_max);
        csv << "n,no_control_bits,no_control_rate,with_control_bits,with_control_rate\n";
        for (int i = 0; i < n_max; ++i) {
            csv << base.points[i].first << ',' << csv_number(base.points[i].second) << ','
                << csv_number(base.rates[i]) << ',' << csv_number(ctrl.points[i].second) << ','
                << csv_number(ctrl.rates[i]) << "\n";
        }
        write_or_print(load_config(args).output_dir, "env_factor_curve.csv", csv.str());
        return kExitOk;
    }
    throw robomendel::ConfigError("unknown curve kind: " + kind);
}

int cmd_run(const CommonArgs& args, const std::string& path_name) {
    const auto cfg = load_config(args);
    const auto path = eng::research_path_from_string(path_name);
    const auto transcript =
        path == eng::ResearchPath::Canonical
            ? eng::run_sequence(cfg.world, cfg.planner.max_cycles, cfg.planner)
            : eng::alternative_path(path, cfg.world, cfg.planner.max_cycles, cfg.planner);

    std::ostringstream log;
    for (const auto& c : transcript.cycles) {
        log << "cycle " << c.index << ": chose";
        for (const auto& id : c.chosen) log << ' ' << id;
        log << "\n" << format_score_table(c.scores);
        for (const auto& note : c.notes) log << "  note: " << note << "\n";
    }
    std::cerr << log.str();
    if (!cfg.output_dir.empty()) {
        // Raw observations in the estimators' line-oriented format, one file
        // per executed experiment.
        for (const auto& c : transcript.cycles) {
            for (std::size_t i = 0; i < c.samples.size(); ++i) {
                std::ostringstream content;
                c.samples[i].save(content);
                std::ostringstream name;
                name << "observations-cycle-" << c.index << '-' << c.observed[i].experiment
                     << ".txt";
                write_or_print(cfg.output_dir, name.str(), content.str());
            }
        }
    }
    write_or_print(cfg.output_dir, "transcript.json", eng::dump_transcript(transcript));
    return kExitOk;
}

int cmd_ip(const CommonArgs& args, const std::string& obs_path, const std::string& model_name,
           int top_k, double confidence) {
    using namespace robomendel;
    const auto cfg = load_config(args);
    std::ifstream in(obs_path);
    if (!in) throw ConfigError("cannot open observations file: " + obs_path);
    const auto sample = ObservationSample::load(in);
    if (sample.empty()) throw ConfigError("observations file is empty: " + obs_path);

    const auto est = potential_information(sample, cfg.model(model_name), confidence);
    const auto top = localize(est, std::min<std::size_t>(top_k, est.n()));

    if (args.format == "json") {
        nlohmann::json j;
        j["n"] = est.n();
        j["mean_bits_per_obs"] = est.mean;
        j["lower_bound_bits_per_obs"] = est.lower_bound;
        j["total_mean_bits"] = est.total_mean();
        j["confidence"] = est.confidence;
        j["top_observations"] = nlohmann::json::array();
        for (const auto i : top) {
            nlohmann::json row;
            row["index"] = i;
            row["ip_bits"] = est.per_observation[i];
            row["observation"] = observation_to_string(sample.observation(i));
            if (!sample.tags().empty()) row["tag"] = sample.tags()[i];
            j["top_observations"].push_back(row);
        }
        write_or_print(cfg.output_dir, "ip.json", j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << std::fixed << std::setprecision(4);
        out << "n observations:      " << est.n() << "\n";
        out << "mean Ip:             " << est.mean << " bits/obs\n";
        out << "lower bound (" << std::setprecision(0) << est.confidence * 100 << "%):   "
            << std::setprecision(4) << est.lower_bound << " bits/obs\n";
        out << "sample total (mean): " << est.total_mean() << " bits\n";
        out << "top observations by Ip:\n";
        for (const auto i : top) {
            out << "  #" << i << "  " << est.per_observation[i] << " bits  "
                << observation_to_string(sample.observation(i));
            if (!sample.tags().empty() && !sample.tags()[i].empty()) out << "  [" << sample.tags()[i] << "]";
            out << "\n";
        }
        write_or_print(cfg.output_dir, "ip.txt", out.str());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"information-metric experiment planner for the simulated pea world"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonArgs common;
    app.add_option("--config", common.config_path, "scenario config JSON")->envname("ROBOMENDEL_CONFIG");
    app.add_option("--seed", common.seed, "override the world RNG seed");
    app.add_option("--out", common.out_dir, "write outputs into this directory");
    app.add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* eval = app.add_subcommand("eval", "score the standard experiment set");
    std::string state_path;
    eval->add_option("--state", state_path, "belief-state JSON (from a transcript)");

    auto* curve = app.add_subcommand("curve", "emit a yield-curve CSV");
    std::string kind;
    double p = 0.3, alpha = 0.5, prior = 0.5, step = 0.05;
    int n_max = 20;
    curve->add_option("kind", kind, "bad-weather | tech-failure | env-factor")->required();
    curve->add_option("--p", p, "confound probability (weather / env factor)")
        ->check(CLI::Range(0.0, 1.0));
    curve->add_option("--alpha", alpha, "hypothesis prior for tech-failure")
        ->check(CLI::Range(0.0, 1.0));
    curve->add_option("--prior", prior, "mixture prior for the tested hypothesis")
        ->check(CLI::Range(0.0, 1.0));
    curve->add_option("--n-max", n_max, "replicate horizon")->check(CLI::PositiveNumber);
    curve->add_option("--step", step, "f grid step for tech-failure")->check(CLI::Range(1e-6, 1.0));

    auto* run = app.add_subcommand("run", "run the sequential planning loop");
    std::string path_name = "canonical";
    run->add_option("--path", path_name, "research path")
        ->check(CLI::IsMember({"canonical", "pu-undilutable", "species-hybrid"}));

    auto* ip = app.add_subcommand("ip", "potential information of an observation file");
    std::string obs_path, model_name;
    int top_k = 5;
    double confidence = 0.95;
    ip->add_option("--observations", obs_path, "line-oriented observation file")->required();
    ip->add_option("--model", model_name, "model name from the config")->required();
    ip->add_option("--top", top_k, "observations to localize")->check(CLI::PositiveNumber);
    ip->add_option("--confidence", confidence, "lower-bound confidence level")
        ->check(CLI::Range(0.0, 1.0));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(common, state_path);
        if (curve->parsed()) return cmd_curve(common, kind, p, alpha, prior, n_max, step);
        if (run->parsed()) return cmd_run(common, path_name);
        if (ip->parsed()) return cmd_ip(common, obs_path, model_name, top_k, confidence);
    } catch (const robomendel::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const robomendel::InvalidArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const robomendel::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
