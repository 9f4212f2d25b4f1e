#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "liquid/scenarios.hpp"
#include "test_util.hpp"

using nlohmann::json;
using testutil::run_cli;

namespace {

std::string write_example2_file() {
    const auto path = testutil::scratch_dir() / "example2.json";
    const auto result = run_cli("scenario --kind example2 --out " + path.string());
    REQUIRE(result.exit_code == 0);
    return path.string();
}

std::vector<std::string> csv_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

}  // namespace

TEST_CASE("cli: scenario example2 emits the benchmark network") {
    const auto result = run_cli("scenario --kind example2");
    REQUIRE(result.exit_code == 0);
    const json doc = json::parse(result.out);
    CHECK(doc["agents"].size() == 5);
    CHECK(doc["edges"].size() == 3);
    CHECK(doc["agents"][2]["p"].get<double>() == 0.7);
    CHECK(doc["manifest"]["command"] == "scenario");
    CHECK(doc["manifest"]["version"].is_string());
}

TEST_CASE("cli: scenario star matches the library construction") {
    const auto result = run_cli("scenario --kind star --n 7 --epsilon 0.01");
    REQUIRE(result.exit_code == 0);
    const json doc = json::parse(result.out);
    const liquid::Scenario expected = liquid::make_star({7, 0.01, false});
    REQUIRE(doc["agents"].size() == 7);
    for (int i = 0; i < 7; ++i)
        CHECK(doc["agents"][i]["p"].get<double>() == expected.competences[i]);
    CHECK(doc["edges"].size() == 3);
}

TEST_CASE("cli: even star size is a usage error") {
    CHECK(run_cli("scenario --kind star --n 6").exit_code == 2);
}

TEST_CASE("cli: unknown flags and kinds are usage errors") {
    CHECK(run_cli("scenario --kind example2 --bogus").exit_code == 2);
    CHECK(run_cli("scenario --kind pentagon").exit_code == 2);
    CHECK(run_cli("accuracy").exit_code == 2);
}

TEST_CASE("cli: accuracy --all-profiles reports the example2 range") {
    const std::string scenario = write_example2_file();
    const auto result = run_cli("accuracy --scenario " + scenario + " --all-profiles");
    REQUIRE(result.exit_code == 0);
    const json doc = json::parse(result.out);
    CHECK(doc["count"].get<long long>() == 6);
    CHECK(doc["min"].get<double>() == doctest::Approx(0.675).epsilon(1e-12));
    CHECK(doc["max"].get<double>() == doctest::Approx(0.850).epsilon(1e-12));
    CHECK(doc["profiles"].size() == 6);
}

TEST_CASE("cli: accuracy on an explicit all-direct profile") {
    const std::string scenario = write_example2_file();
    const auto profile_path = testutil::scratch_dir() / "all_direct.json";
    testutil::spit(profile_path,
                   R"({"0":"direct","1":"direct","2":"direct","3":"direct","4":"direct"})");
    const auto result =
        run_cli("accuracy --scenario " + scenario + " --profile " + profile_path.string());
    REQUIRE(result.exit_code == 0);
    const json doc = json::parse(result.out);
    CHECK(doc["method"] == "exact-dp");
    CHECK(doc["value"].get<double>() == doctest::Approx(0.795).epsilon(1e-12));
}

TEST_CASE("cli: cyclic profile exits 3") {
    const auto scenario_path = testutil::scratch_dir() / "cycle.json";
    testutil::spit(scenario_path, R"({
        "agents": [{"id":0,"p":0.5},{"id":1,"p":0.5}],
        "edges": [[0,1],[1,0]],
        "profile": {"0":"1","1":"0"}
    })");
    const auto result = run_cli("accuracy --scenario " + scenario_path.string());
    CHECK(result.exit_code == 3);
}

TEST_CASE("cli: non-edge profile exits 3") {
    const std::string scenario = write_example2_file();
    const auto profile_path = testutil::scratch_dir() / "nonedge.json";
    testutil::spit(profile_path, R"({"0":"1"})");
    const auto result =
        run_cli("accuracy --scenario " + scenario + " --profile " + profile_path.string());
    CHECK(result.exit_code == 3);
}

TEST_CASE("cli: missing input file exits 1") {
    CHECK(run_cli("accuracy --scenario /does/not/exist.json").exit_code == 1);
}

TEST_CASE("cli: odp finds the example2 optimum") {
    const std::string scenario = write_example2_file();
    const auto result = run_cli("odp --scenario " + scenario);
    REQUIRE(result.exit_code == 0);
    const json doc = json::parse(result.out);
    CHECK(doc["accuracy"].get<double>() == doctest::Approx(0.85).epsilon(1e-12));
    CHECK(doc["method"] == "bruteforce");
    CHECK(doc["profile"]["3"] == "1");
    CHECK(doc["profile"]["4"] == "2");
}

TEST_CASE("cli: oversized odp exits 4") {
    // a ring with two outgoing edges per agent: 3^30 combinations
    json agents = json::array();
    json edges = json::array();
    for (int i = 0; i < 30; ++i) {
        agents.push_back(json{{"id", i}, {"p", 0.6}});
        edges.push_back(json::array({i, (i + 1) % 30}));
        edges.push_back(json::array({i, (i + 2) % 30}));
    }
    const auto path = testutil::scratch_dir() / "big.json";
    testutil::spit(path, json{{"agents", agents}, {"edges", edges}}.dump());
    CHECK(run_cli("odp --scenario " + path.string()).exit_code == 4);
    // the heuristic still succeeds
    CHECK(run_cli("odp --scenario " + path.string() + " --heuristic --iters 50").exit_code == 0);
}

TEST_CASE("cli: jury curve at p = 0.5 stays flat") {
    const auto result = run_cli("jury --p 0.5 --n-max 11");
    REQUIRE(result.exit_code == 0);
    const auto lines = csv_lines(result.out);
    REQUIRE(lines.size() == 7);  // header + n = 1,3,...,11
    CHECK(lines.front() == "n,probability");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto comma = lines[i].find(',');
        const double value = std::stod(lines[i].substr(comma + 1));
        CHECK(std::abs(value - 0.5) <= 1e-12);
    }
}

TEST_CASE("cli: jury output uses CRLF line endings") {
    const auto result = run_cli("jury --p 0.6 --n-max 3");
    REQUIRE(result.exit_code == 0);
    CHECK(result.out.find("\r\n") != std::string::npos);
}

TEST_CASE("cli: dynamics writes the documented CSV and a manifest sidecar") {
    const auto config_path = testutil::scratch_dir() / "dyn_config.json";
    testutil::spit(config_path, R"({"n":20,"cap":5,"alpha":0.1})");
    const auto out_path = testutil::scratch_dir() / "dyn_run.csv";
    const auto result = run_cli("dynamics --config " + config_path.string() +
                                " --epochs 10 --seed 3 --out " + out_path.string());
    REQUIRE(result.exit_code == 0);
    const auto lines = csv_lines(testutil::slurp(out_path));
    REQUIRE(lines.size() == 11);
    CHECK(lines.front() == "epoch,result,accuracy,neg_alpha_frac,max_weight,guru_count");
    const json manifest = json::parse(testutil::slurp(out_path.string() + ".manifest.json"));
    CHECK(manifest["command"] == "dynamics");
    CHECK(manifest["config"]["epochs"].get<int>() == 10);
}

TEST_CASE("cli: identical flags and seed reproduce byte-identical output") {
    const std::string scenario = write_example2_file();
    const auto a = run_cli("accuracy --scenario " + scenario + " --mc 50000 --seed 7");
    const auto b = run_cli("accuracy --scenario " + scenario + " --mc 50000 --seed 7");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    const auto c = run_cli("scenario --kind random --n 30 --seed 5");
    const auto d = run_cli("scenario --kind random --n 30 --seed 5");
    REQUIRE(c.exit_code == 0);
    CHECK(c.out == d.out);
}
