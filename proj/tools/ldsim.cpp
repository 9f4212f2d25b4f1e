#include <charconv>
#include <cstdint>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "liquid/accuracy.hpp"
#include "liquid/core.hpp"
#include "liquid/dynamics.hpp"
#include "liquid/json_io.hpp"
#include "liquid/odp.hpp"
#include "liquid/scenarios.hpp"
#include "liquid/version.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadProfile = 3;
constexpr int kExitSearchSpace = 4;

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

json make_manifest(const std::string& command, const std::vector<std::string>& inputs,
                   const std::string& output, const json& config) {
    return json{{"command", command},
                {"config", config},
                {"inputs", inputs},
                {"output", output.empty() ? json(nullptr) : json(output)},
                {"version", liquid::kVersion}};
}

void emit_json(json doc, const json& manifest, const std::string& out_path) {
    doc["manifest"] = manifest;
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        liquid::write_text_file(out_path, text);
}

// RFC 4180: header first, CRLF line endings
void emit_csv(const std::vector<std::string>& lines, const json& manifest,
              const std::string& out_path) {
    std::string text;
    for (const auto& line : lines) {
        text += line;
        text += "\r\n";
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        liquid::write_text_file(out_path, text);
        liquid::write_text_file(out_path + ".manifest.json", manifest.dump(2) + "\n");
    }
}

const char* method_name(liquid::AccuracyMethod method) {
    switch (method) {
        case liquid::AccuracyMethod::ExactDp: return "exact-dp";
        case liquid::AccuracyMethod::ExactEnum: return "exact-enum";
        case liquid::AccuracyMethod::MonteCarlo: return "monte-carlo";
    }
    return "exact-dp";
}

struct ScenarioArgs {
    std::string kind;
    int n = 7;
    double epsilon = 0.01;
    std::uint64_t seed = 0;
    std::string out;
    std::string dist = "beta";
    double beta_a = 4.0;
    double beta_b = 2.0;
    double lo = 0.0;
    double hi = 1.0;
    std::vector<double> values;
    std::string edge_model = "out-degree";
    int k = 5;
    double preset_fraction = 0.90;
    double preset_share = 0.95;
    double alpha = 0.10;
    int cap = 0;  // 0 = no cap
};

int run_scenario(const ScenarioArgs& args) {
    json config{{"kind", args.kind}};
    if (args.kind == "example2") {
        const liquid::Scenario scenario = liquid::make_example2();
        emit_json(liquid::scenario_to_json(scenario.graph, scenario.competences),
                  make_manifest("scenario", {}, args.out, config), args.out);
        return kExitOk;
    }
    if (args.kind == "star" || args.kind == "inverted-star") {
        const liquid::StarParams params{args.n, args.epsilon, args.kind == "inverted-star"};
        const liquid::Scenario scenario = liquid::make_star(params);
        config["n"] = args.n;
        config["epsilon"] = args.epsilon;
        emit_json(liquid::scenario_to_json(scenario.graph, scenario.competences),
                  make_manifest("scenario", {}, args.out, config), args.out);
        return kExitOk;
    }

    liquid::ScenarioConfig generator;
    generator.n = args.n;
    generator.seed = args.seed;
    generator.preset_delegation_fraction = args.preset_fraction;
    generator.preset_share_of_delegations = args.preset_share;
    generator.alpha = args.alpha;
    if (args.cap > 0) generator.cap = args.cap;
    if (args.dist == "beta")
        generator.competence = liquid::BetaCompetences{args.beta_a, args.beta_b};
    else if (args.dist == "uniform")
        generator.competence = liquid::UniformCompetences{args.lo, args.hi};
    else
        generator.competence = liquid::FixedCompetences{args.values};
    if (args.edge_model == "out-degree")
        generator.edges = liquid::RandomOutDegree{args.k};
    else
        generator.edges = liquid::PreferentialAttachment{args.k};

    const liquid::RandomScenario scenario = liquid::random_scenario(generator);
    json echo = liquid::config_to_json(generator);
    echo["kind"] = "random";
    emit_json(liquid::scenario_to_json(scenario.graph, scenario.competences, nullptr,
                                       &scenario.roles),
              make_manifest("scenario", {}, args.out, echo), args.out);
    return kExitOk;
}

struct AccuracyArgs {
    std::string scenario_path;
    std::string profile_path;
    std::string out;
    bool all_profiles = false;
    long long mc_trials = 0;
    std::uint64_t seed = 0;
};

int run_accuracy(const AccuracyArgs& args) {
    const liquid::ScenarioFile scenario = liquid::load_scenario(args.scenario_path);
    const int n = scenario.graph.size();
    std::vector<std::string> inputs{args.scenario_path};
    json config{{"scenario", args.scenario_path}};

    if (args.all_profiles) {
        config["all_profiles"] = true;
        double min_accuracy = std::numeric_limits<double>::infinity();
        double max_accuracy = -std::numeric_limits<double>::infinity();
        long long count = 0;
        json profiles = json::array();
        liquid::for_each_profile(
            scenario.graph, std::nullopt,
            [&](const liquid::DelegationProfile& profile, const liquid::Tally& tally) {
                const double accuracy =
                    liquid::exact_accuracy_from_tally(tally, scenario.competences, n);
                min_accuracy = std::min(min_accuracy, accuracy);
                max_accuracy = std::max(max_accuracy, accuracy);
                ++count;
                profiles.push_back(
                    json{{"accuracy", accuracy}, {"profile", liquid::profile_to_json(profile)}});
            });
        json doc{{"count", count},
                 {"max", max_accuracy},
                 {"min", min_accuracy},
                 {"profiles", std::move(profiles)}};
        emit_json(std::move(doc), make_manifest("accuracy", inputs, args.out, config), args.out);
        return kExitOk;
    }

    liquid::DelegationProfile profile = liquid::DelegationProfile::all_direct(n);
    if (!args.profile_path.empty()) {
        profile = liquid::load_profile(args.profile_path, n);
        inputs.push_back(args.profile_path);
        config["profile"] = args.profile_path;
    } else if (scenario.profile) {
        profile = *scenario.profile;
    }

    liquid::AccuracyResult result;
    if (args.mc_trials > 0) {
        config["mc"] = args.mc_trials;
        config["seed"] = args.seed;
        result = liquid::mc_accuracy(scenario.graph, scenario.competences, profile,
                                     args.mc_trials, args.seed);
    } else {
        result = liquid::exact_accuracy_dp(scenario.graph, scenario.competences, profile);
    }
    json doc{{"method", method_name(result.method)},
             {"stderr", result.std_error},
             {"trials", result.trials},
             {"value", result.value}};
    emit_json(std::move(doc), make_manifest("accuracy", inputs, args.out, config), args.out);
    return kExitOk;
}

struct OdpArgs {
    std::string scenario_path;
    std::string out;
    int cap = 0;
    bool heuristic = false;
    long long iters = 1000;
    std::uint64_t seed = 0;
};

int run_odp(const OdpArgs& args) {
    const liquid::ScenarioFile scenario = liquid::load_scenario(args.scenario_path);
    std::optional<int> cap;
    if (args.cap > 0) cap = args.cap;
    json config{{"scenario", args.scenario_path}, {"cap", cap ? json(*cap) : json(nullptr)}};

    liquid::OdpSolution solution;
    if (args.heuristic) {
        config["heuristic"] = true;
        config["iters"] = args.iters;
        config["seed"] = args.seed;
        solution = liquid::solve_local_search(scenario.graph, scenario.competences, cap,
                                              args.iters, args.seed);
    } else {
        solution = liquid::solve_bruteforce(scenario.graph, scenario.competences, cap);
    }
    json doc{{"accuracy", solution.accuracy},
             {"cap", solution.cap ? json(*solution.cap) : json(nullptr)},
             {"feasible_count", solution.feasible_count},
             {"method", args.heuristic ? "local-search" : "bruteforce"},
             {"profile", liquid::profile_to_json(solution.profile)}};
    emit_json(std::move(doc),
              make_manifest("odp", {args.scenario_path}, args.out, config), args.out);
    return kExitOk;
}

struct DynamicsArgs {
    std::string config_path;
    std::string out;
    long long epochs = 1;
    std::uint64_t seed = 0;
};

int run_dynamics(const DynamicsArgs& args) {
    const liquid::ScenarioConfig config = liquid::load_config(args.config_path);
    const std::vector<liquid::EpochRecord> records =
        liquid::run_simulation(config, args.epochs, args.seed);

    std::vector<std::string> lines;
    lines.reserve(records.size() + 1);
    lines.emplace_back("epoch,result,accuracy,neg_alpha_frac,max_weight,guru_count");
    for (const auto& record : records) {
        std::string line = std::to_string(record.epoch);
        line += record.result == liquid::Outcome::Correct ? ",1," : ",0,";
        line += format_double(record.accuracy);
        line += ',';
        line += format_double(record.neg_alpha_fraction);
        line += ',';
        line += std::to_string(record.max_guru_weight);
        line += ',';
        line += std::to_string(record.guru_count);
        lines.push_back(std::move(line));
    }

    json echo = liquid::config_to_json(config);
    echo["epochs"] = args.epochs;
    echo["run_seed"] = args.seed;
    emit_csv(lines, make_manifest("dynamics", {args.config_path}, args.out, echo), args.out);
    return kExitOk;
}

struct JuryArgs {
    double p = 0.5;
    int n_max = 101;
    std::string out;
};

int run_jury(const JuryArgs& args) {
    std::vector<std::string> lines;
    lines.emplace_back("n,probability");
    for (int n = 1; n <= args.n_max; n += 2)
        lines.push_back(std::to_string(n) + "," + format_double(liquid::condorcet_accuracy(n, args.p)));
    json config{{"p", args.p}, {"n_max", args.n_max}};
    emit_csv(lines, make_manifest("jury", {}, args.out, config), args.out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"liquid-democracy delegation network toolkit"};
    app.set_version_flag("--version", liquid::kVersion);
    app.require_subcommand(1);

    ScenarioArgs scenario_args;
    CLI::App* scenario_cmd = app.add_subcommand("scenario", "Generate a scenario JSON file");
    scenario_cmd->add_option("--kind", scenario_args.kind, "Scenario family")
        ->required()
        ->check(CLI::IsMember({"star", "inverted-star", "example2", "random"}));
    scenario_cmd->add_option("--n", scenario_args.n, "Agent count");
    scenario_cmd->add_option("--epsilon", scenario_args.epsilon, "Star competence offset");
    scenario_cmd->add_option("--seed", scenario_args.seed, "Generator seed");
    scenario_cmd->add_option("--out", scenario_args.out, "Output path (default stdout)");
    scenario_cmd->add_option("--dist", scenario_args.dist, "Competence distribution")
        ->check(CLI::IsMember({"beta", "uniform", "fixed"}));
    scenario_cmd->add_option("--beta-a", scenario_args.beta_a, "Beta shape a");
    scenario_cmd->add_option("--beta-b", scenario_args.beta_b, "Beta shape b");
    scenario_cmd->add_option("--lo", scenario_args.lo, "Uniform lower bound");
    scenario_cmd->add_option("--hi", scenario_args.hi, "Uniform upper bound");
    scenario_cmd->add_option("--values", scenario_args.values, "Fixed competence list")
        ->delimiter(',');
    scenario_cmd->add_option("--edge-model", scenario_args.edge_model, "Edge model")
        ->check(CLI::IsMember({"out-degree", "preferential"}));
    scenario_cmd->add_option("--k", scenario_args.k, "Edges per agent");
    scenario_cmd->add_option("--preset-fraction", scenario_args.preset_fraction,
                             "Fraction of agents that delegate");
    scenario_cmd->add_option("--preset-share", scenario_args.preset_share,
                             "Share of delegators that are preset");
    scenario_cmd->add_option("--alpha", scenario_args.alpha, "Delegation-class threshold");
    scenario_cmd->add_option("--cap", scenario_args.cap, "Guru weight cap");

    AccuracyArgs accuracy_args;
    CLI::App* accuracy_cmd = app.add_subcommand("accuracy", "Evaluate network accuracy");
    accuracy_cmd->add_option("--scenario", accuracy_args.scenario_path, "Scenario JSON file")
        ->required();
    CLI::Option* profile_opt =
        accuracy_cmd->add_option("--profile", accuracy_args.profile_path, "Profile JSON file");
    CLI::Option* mc_opt =
        accuracy_cmd->add_option("--mc", accuracy_args.mc_trials, "Monte Carlo trial count");
    accuracy_cmd->add_option("--seed", accuracy_args.seed, "Monte Carlo seed");
    CLI::Option* all_opt = accuracy_cmd->add_flag("--all-profiles", accuracy_args.all_profiles,
                                                  "Evaluate every valid profile");
    all_opt->excludes(profile_opt);
    all_opt->excludes(mc_opt);
    accuracy_cmd->add_option("--out", accuracy_args.out, "Output path (default stdout)");

    OdpArgs odp_args;
    CLI::App* odp_cmd = app.add_subcommand("odp", "Solve the optimal-delegation problem");
    odp_cmd->add_option("--scenario", odp_args.scenario_path, "Scenario JSON file")->required();
    odp_cmd->add_option("--cap", odp_args.cap, "Guru weight cap");
    odp_cmd->add_flag("--heuristic", odp_args.heuristic, "Use local search instead of brute force");
    odp_cmd->add_option("--iters", odp_args.iters, "Local search iterations");
    odp_cmd->add_option("--seed", odp_args.seed, "Local search seed");
    odp_cmd->add_option("--out", odp_args.out, "Output path (default stdout)");

    DynamicsArgs dynamics_args;
    CLI::App* dynamics_cmd = app.add_subcommand("dynamics", "Run repeated-poll trust dynamics");
    dynamics_cmd->add_option("--config", dynamics_args.config_path, "Generator config JSON file")
        ->required();
    dynamics_cmd->add_option("--epochs", dynamics_args.epochs, "Number of polls")
        ->required()
        ->check(CLI::PositiveNumber);
    dynamics_cmd->add_option("--seed", dynamics_args.seed, "Run seed");
    dynamics_cmd->add_option("--out", dynamics_args.out, "CSV output path (default stdout)");

    JuryArgs jury_args;
    CLI::App* jury_cmd = app.add_subcommand("jury", "Condorcet jury curve over odd n");
    jury_cmd->add_option("--p", jury_args.p, "Juror competence")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    jury_cmd->add_option("--n-max", jury_args.n_max, "Largest jury size")
        ->check(CLI::PositiveNumber);
    jury_cmd->add_option("--out", jury_args.out, "CSV output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // help / version
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (scenario_cmd->parsed()) return run_scenario(scenario_args);
        if (accuracy_cmd->parsed()) return run_accuracy(accuracy_args);
        if (odp_cmd->parsed()) return run_odp(odp_args);
        if (dynamics_cmd->parsed()) return run_dynamics(dynamics_args);
        if (jury_cmd->parsed()) return run_jury(jury_args);
    } catch (const liquid::CycleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadProfile;
    } catch (const liquid::NonEdgeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadProfile;
    } catch (const liquid::SearchSpaceTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSearchSpace;
    } catch (const liquid::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const liquid::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}
