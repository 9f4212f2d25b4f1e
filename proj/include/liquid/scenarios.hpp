#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "liquid/core.hpp"

namespace liquid {

struct Scenario {
    SocialGraph graph;
    CompetenceVector competences;
};

struct StarParams {
    int n = 7;              // odd, >= 3
    double epsilon = 0.01;  // in (0, 0.5)
    bool inverted = false;
};

// (n-1)/2 isolated agents plus a star of (n+1)/2 agents whose leaves may
// delegate to a slightly less informed center. Isolated agents always vote
// against the ground truth; the inverted variant flips all competences.
Scenario make_star(const StarParams& params);

// Five-agent benchmark network: competences (1.0, 0.5, 0.7, 0.6, 0.5),
// agent 3 may delegate to 1 or 2, agent 4 may delegate to 2.
Scenario make_example2();

enum class DelegationModel { Kahng, Refined };

// Kahng: allowed iff p_j > p_i + alpha.
// Refined: p_j > p_i + alpha when p_i >= 1/2, p_j < p_i - alpha when p_i <= 1/2
// (at p_i = 1/2 both branches are admitted).
bool delegation_allowed(double p_i, double p_j, double alpha, DelegationModel model);

enum class DelegationClass { PositiveAlpha, NegativeAlpha, NonAlpha };

// Total over in-range inputs; the three classes partition them.
DelegationClass classify_delegation(double p_i, double p_j, double alpha);

enum class Role { PresetDelegator, Active, DirectOnly };

struct FixedCompetences {
    std::vector<double> values;
};
struct BetaCompetences {
    double a = 4.0;
    double b = 2.0;
};
struct UniformCompetences {
    double lo = 0.0;
    double hi = 1.0;
};
using CompetenceSpec = std::variant<FixedCompetences, BetaCompetences, UniformCompetences>;

struct RandomOutDegree {
    int k = 5;
};
struct PreferentialAttachment {
    int k = 5;
};
using EdgeSpec = std::variant<RandomOutDegree, PreferentialAttachment>;

struct ScenarioConfig {
    int n = 100;
    CompetenceSpec competence = BetaCompetences{};
    EdgeSpec edges = RandomOutDegree{};
    double preset_delegation_fraction = 0.90;   // fraction of agents that delegate at all
    double preset_share_of_delegations = 0.95;  // share of delegators whose choice is preset
    double alpha = 0.10;
    std::optional<int> cap;
    std::uint64_t seed = 0;
};

struct RandomScenario {
    SocialGraph graph;
    CompetenceVector competences;
    std::vector<Role> roles;
};

// Seeded, reproducible network plus per-agent roles.
RandomScenario random_scenario(const ScenarioConfig& config);

}  // namespace liquid
