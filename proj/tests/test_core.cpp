#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "liquid/core.hpp"
#include "test_util.hpp"

using namespace liquid;

TEST_CASE("validate_graph accepts a well-formed input") {
    const ValidationReport report = validate_graph(3, {{0, 1}}, {0.5, 0.5, 0.5});
    CHECK(report.ok());
}

TEST_CASE("validate_graph reports self-loops") {
    const ValidationReport report = validate_graph(3, {{2, 2}}, {0.5, 0.5, 0.5});
    REQUIRE_FALSE(report.ok());
    CHECK(report.issues.front().kind == ValidationIssue::Kind::SelfLoop);
}

TEST_CASE("validate_graph reports out-of-range endpoints") {
    const ValidationReport report = validate_graph(3, {{0, 7}}, {0.5, 0.5, 0.5});
    REQUIRE_FALSE(report.ok());
    CHECK(report.issues.front().kind == ValidationIssue::Kind::EndpointOutOfRange);
}

TEST_CASE("validate_graph reports out-of-range competences") {
    const ValidationReport report = validate_graph(2, {}, {0.5, 1.3});
    REQUIRE_FALSE(report.ok());
    CHECK(report.issues.front().kind == ValidationIssue::Kind::CompetenceOutOfRange);
}

TEST_CASE("validate_graph reports duplicate edges") {
    const ValidationReport report = validate_graph(3, {{0, 1}, {0, 1}}, {0.5, 0.5, 0.5});
    REQUIRE_FALSE(report.ok());
    CHECK(report.issues.front().kind == ValidationIssue::Kind::DuplicateEdge);
}

TEST_CASE("resolve: star leaves delegating to the center") {
    // leaves 3, 5, 6 delegate to center 4; agents 0..2 vote directly
    const SocialGraph graph(7, {{3, 4}, {5, 4}, {6, 4}});
    DelegationProfile profile(7);
    profile.set_delegate(3, 4);
    profile.set_delegate(5, 4);
    profile.set_delegate(6, 4);
    const Tally tally = resolve(graph, profile);
    CHECK(tally.weights == std::map<int, int>{{0, 1}, {1, 1}, {2, 1}, {4, 4}});
    CHECK(tally.total() == 7);
    CHECK(tally.max_weight() == 4);
}

TEST_CASE("resolve: transitive chain collapses onto the terminal voter") {
    const SocialGraph graph(3, {{0, 1}, {1, 2}});
    DelegationProfile profile(3);
    profile.set_delegate(0, 1);
    profile.set_delegate(1, 2);
    const Tally tally = resolve(graph, profile);
    CHECK(tally.weights == std::map<int, int>{{2, 3}});
}

TEST_CASE("resolve: two-cycle raises CycleError naming a member") {
    const SocialGraph graph(2, {{0, 1}, {1, 0}});
    DelegationProfile profile(2);
    profile.set_delegate(0, 1);
    profile.set_delegate(1, 0);
    try {
        resolve(graph, profile);
        FAIL("expected CycleError");
    } catch (const CycleError& err) {
        CHECK((err.agent() == 0 || err.agent() == 1));
    }
}

TEST_CASE("resolve: delegation off the edge set raises NonEdgeError") {
    const SocialGraph graph(3, {{0, 1}});
    DelegationProfile profile(3);
    profile.set_delegate(0, 2);
    try {
        resolve(graph, profile);
        FAIL("expected NonEdgeError");
    } catch (const NonEdgeError& err) {
        CHECK(err.from() == 0);
        CHECK(err.to() == 2);
    }
}

TEST_CASE("weighted_majority: star tally carried by the center") {
    const Tally tally{{{1, 1}, {2, 1}, {3, 1}, {5, 4}}};
    const std::map<int, bool> votes{{1, false}, {2, false}, {3, false}, {5, true}};
    CHECK(weighted_majority(tally, votes, 7) == Outcome::Correct);  // 4 > 3.5
}

TEST_CASE("weighted_majority: all gurus incorrect") {
    const Tally tally{{{0, 2}, {1, 1}}};
    const std::map<int, bool> votes{{0, false}, {1, false}};
    CHECK(weighted_majority(tally, votes, 3) == Outcome::Incorrect);
}

TEST_CASE("weighted_majority: ties count as incorrect") {
    const Tally tally{{{0, 2}, {1, 2}}};
    const std::map<int, bool> votes{{0, true}, {1, false}};
    CHECK(weighted_majority(tally, votes, 4) == Outcome::Incorrect);
}

TEST_CASE("weighted_majority: vote cover must be exact") {
    const Tally tally{{{0, 1}, {1, 1}}};
    CHECK_THROWS_AS(weighted_majority(tally, {{0, true}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(weighted_majority(tally, {{0, true}, {2, true}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(weighted_majority(tally, {{0, true}, {1, true}, {2, true}}, 2),
                    std::invalid_argument);
}

TEST_CASE("property: weights sum to n and chains stay within bounds") {
    std::mt19937_64 eng(2024);
    for (int round = 0; round < 200; ++round) {
        const auto instance = testutil::random_acyclic_instance(eng);
        const Tally tally = resolve(instance.graph, instance.profile);
        CHECK(tally.total() == instance.graph.size());
        for (const auto& [guru, weight] : tally.weights) {
            CHECK(weight >= 1);
            CHECK(instance.profile.is_direct(guru));
        }
    }
}

TEST_CASE("property: resolution commutes with relabeling") {
    std::mt19937_64 eng(77);
    for (int round = 0; round < 100; ++round) {
        const auto instance = testutil::random_acyclic_instance(eng);
        const int n = instance.graph.size();
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), eng);
        const auto permuted = testutil::permute_instance(instance, perm);

        const Tally original = resolve(instance.graph, instance.profile);
        const Tally relabeled = resolve(permuted.graph, permuted.profile);
        Tally expected;
        for (const auto& [guru, weight] : original.weights) expected.weights[perm[guru]] = weight;
        CHECK(relabeled.weights == expected.weights);
    }
}

TEST_CASE("property: all-direct resolution gives weight 1 to everyone") {
    std::mt19937_64 eng(5);
    for (int round = 0; round < 50; ++round) {
        const auto instance = testutil::random_acyclic_instance(eng);
        const Tally tally =
            resolve(instance.graph, DelegationProfile::all_direct(instance.graph.size()));
        CHECK(tally.guru_count() == instance.graph.size());
        for (const auto& [guru, weight] : tally.weights) CHECK(weight == 1);
    }
}

TEST_CASE("graph construction rejects malformed edges") {
    CHECK_THROWS_AS(SocialGraph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SocialGraph(3, {{0, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(SocialGraph(3, {{0, 1}, {0, 1}}), std::invalid_argument);
}
