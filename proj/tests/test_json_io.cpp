#include <random>

#include "doctest.h"
#include "json.hpp"
#include "liquid/json_io.hpp"
#include "test_util.hpp"

using namespace liquid;
using nlohmann::json;

TEST_CASE("scenario_from_json parses the documented shape") {
    const json doc = json::parse(R"({
        "agents": [{"id":0,"p":1.0},{"id":1,"p":0.5},{"id":2,"p":0.7},
                   {"id":3,"p":0.6},{"id":4,"p":0.5}],
        "edges": [[3,1],[3,2],[4,2]],
        "profile": {"3":"1","4":"2","0":"direct"}
    })");
    const ScenarioFile file = scenario_from_json(doc);
    CHECK(file.graph.size() == 5);
    CHECK(file.competences == CompetenceVector{1.0, 0.5, 0.7, 0.6, 0.5});
    CHECK(file.graph.has_edge(3, 1));
    CHECK(file.graph.has_edge(4, 2));
    REQUIRE(file.profile.has_value());
    CHECK(file.profile->target_of(3) == 1);
    CHECK(file.profile->target_of(4) == 2);
    CHECK(file.profile->is_direct(0));
    CHECK_FALSE(file.roles.has_value());
}

TEST_CASE("unknown keys are rejected everywhere") {
    CHECK_THROWS_AS(scenario_from_json(json::parse(
                        R"({"agents":[{"id":0,"p":0.5}],"edges":[],"extra":1})")),
                    SchemaError);
    CHECK_THROWS_AS(scenario_from_json(json::parse(
                        R"({"agents":[{"id":0,"p":0.5,"name":"x"}],"edges":[]})")),
                    SchemaError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"n":5,"bogus":true})")), SchemaError);
}

TEST_CASE("structural scenario defects fail the schema check") {
    // duplicate id
    CHECK_THROWS_AS(scenario_from_json(json::parse(
                        R"({"agents":[{"id":0,"p":0.5},{"id":0,"p":0.5}],"edges":[]})")),
                    SchemaError);
    // non-dense id
    CHECK_THROWS_AS(scenario_from_json(json::parse(
                        R"({"agents":[{"id":0,"p":0.5},{"id":5,"p":0.5}],"edges":[]})")),
                    SchemaError);
    // competence out of range
    CHECK_THROWS_AS(
        scenario_from_json(json::parse(R"({"agents":[{"id":0,"p":1.5}],"edges":[]})")),
        SchemaError);
    // self-loop edge
    CHECK_THROWS_AS(scenario_from_json(json::parse(
                        R"({"agents":[{"id":0,"p":0.5},{"id":1,"p":0.5}],"edges":[[0,0]]})")),
                    SchemaError);
}

TEST_CASE("profile parsing is strict about ids and actions") {
    CHECK_THROWS_AS(profile_from_json(json::parse(R"({"9":"direct"})"), 3), SchemaError);
    CHECK_THROWS_AS(profile_from_json(json::parse(R"({"a":"direct"})"), 3), SchemaError);
    CHECK_THROWS_AS(profile_from_json(json::parse(R"({"0":"nowhere"})"), 3), SchemaError);
    CHECK_THROWS_AS(profile_from_json(json::parse(R"({"0":7})"), 3), SchemaError);
    const DelegationProfile profile = profile_from_json(json::parse(R"({"0":"2"})"), 3);
    CHECK(profile.target_of(0) == 2);
    CHECK(profile.is_direct(1));  // unlisted agents vote directly
}

TEST_CASE("roles round-trip through the scenario document") {
    const SocialGraph graph(3, {{0, 1}});
    const CompetenceVector competences{0.2, 0.9, 0.6};
    const std::vector<Role> roles{Role::PresetDelegator, Role::Active, Role::DirectOnly};
    const json doc = scenario_to_json(graph, competences, nullptr, &roles);
    const ScenarioFile file = scenario_from_json(doc);
    REQUIRE(file.roles.has_value());
    CHECK(*file.roles == roles);
}

TEST_CASE("property: scenario documents round-trip") {
    std::mt19937_64 eng(2023);
    for (int round = 0; round < 40; ++round) {
        const auto instance = testutil::random_acyclic_instance(eng);
        const json doc =
            scenario_to_json(instance.graph, instance.competences, &instance.profile);
        const ScenarioFile file = scenario_from_json(doc);
        CHECK(file.graph.edges() == instance.graph.edges());
        CHECK(file.competences == instance.competences);
        REQUIRE(file.profile.has_value());
        CHECK(*file.profile == instance.profile);
        // a second dump is byte-identical
        CHECK(doc.dump() == scenario_to_json(file.graph, file.competences,
                                             &*file.profile)
                                .dump());
    }
}

TEST_CASE("config documents round-trip through their JSON form") {
    ScenarioConfig config;
    config.n = 50;
    config.competence = FixedCompetences{{0.1, 0.9}};
    config.edges = PreferentialAttachment{2};
    config.alpha = 0.2;
    config.cap = 7;
    config.seed = 99;
    const ScenarioConfig loaded = config_from_json(config_to_json(config));
    CHECK(loaded.n == config.n);
    CHECK(std::get<FixedCompetences>(loaded.competence).values ==
          std::get<FixedCompetences>(config.competence).values);
    CHECK(std::get<PreferentialAttachment>(loaded.edges).k == 2);
    CHECK(loaded.alpha == config.alpha);
    CHECK(loaded.cap == config.cap);
    CHECK(loaded.seed == config.seed);
}

TEST_CASE("config parsing applies defaults and validates kinds") {
    const ScenarioConfig config = config_from_json(json::parse(R"({"n":25})"));
    CHECK(config.n == 25);
    CHECK(std::holds_alternative<BetaCompetences>(config.competence));
    CHECK(std::holds_alternative<RandomOutDegree>(config.edges));
    CHECK(config.preset_delegation_fraction == 0.90);
    CHECK(config.preset_share_of_delegations == 0.95);
    CHECK_FALSE(config.cap.has_value());
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"n":5,"competence":{"kind":"zipf"}})")),
                    SchemaError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({})")), SchemaError);
}

TEST_CASE("missing files raise IoError") {
    CHECK_THROWS_AS(load_scenario("/nonexistent/path.json"), IoError);
    CHECK_THROWS_AS(load_config("/nonexistent/config.json"), IoError);
}
