#include "liquid/scenarios.hpp"

#include <algorithm>
#include <set>

#include "liquid/rng.hpp"

namespace liquid {

Scenario make_star(const StarParams& params) {
    if (params.n < 3 || params.n % 2 == 0)
        throw std::invalid_argument("star size must be odd and >= 3");
    if (!(params.epsilon > 0.0 && params.epsilon < 0.5))
        throw std::invalid_argument("epsilon must be in (0, 0.5)");
    const int n = params.n;
    const int isolated = (n - 1) / 2;
    const int center = isolated + 1;
    const double isolated_p = params.inverted ? 1.0 : 0.0;
    const double leaf_p = params.inverted ? params.epsilon : 1.0 - params.epsilon;
    const double center_p = params.inverted ? 2.0 * params.epsilon : 1.0 - 2.0 * params.epsilon;

    Scenario scenario;
    scenario.graph = SocialGraph(n);
    scenario.competences.assign(static_cast<std::size_t>(n), isolated_p);
    for (int i = isolated; i < n; ++i)
        scenario.competences[static_cast<std::size_t>(i)] = (i == center) ? center_p : leaf_p;
    for (int i = isolated; i < n; ++i)
        if (i != center) scenario.graph.add_edge(i, center);
    return scenario;
}

Scenario make_example2() {
    Scenario scenario;
    scenario.graph = SocialGraph(5, {{3, 1}, {3, 2}, {4, 2}});
    scenario.competences = {1.0, 0.5, 0.7, 0.6, 0.5};
    return scenario;
}

namespace {

void check_alpha_inputs(double p_i, double p_j, double alpha) {
    if (alpha < 0.0) throw std::invalid_argument("alpha must be non-negative");
    if (!(p_i >= 0.0 && p_i <= 1.0 && p_j >= 0.0 && p_j <= 1.0))
        throw std::invalid_argument("competences must be in [0, 1]");
}

}  // namespace

bool delegation_allowed(double p_i, double p_j, double alpha, DelegationModel model) {
    check_alpha_inputs(p_i, p_j, alpha);
    switch (model) {
        case DelegationModel::Kahng:
            return p_j > p_i + alpha;
        case DelegationModel::Refined:
            return (p_i >= 0.5 && p_j > p_i + alpha) || (p_i <= 0.5 && p_j < p_i - alpha);
    }
    return false;
}

DelegationClass classify_delegation(double p_i, double p_j, double alpha) {
    check_alpha_inputs(p_i, p_j, alpha);
    if (p_i >= 0.5 && p_j > p_i + alpha) return DelegationClass::PositiveAlpha;
    if (p_i <= 0.5 && p_j < p_i - alpha) return DelegationClass::NegativeAlpha;
    return DelegationClass::NonAlpha;
}

namespace {

CompetenceVector sample_competences(const CompetenceSpec& spec, int n, std::mt19937_64& eng) {
    CompetenceVector result;
    result.reserve(static_cast<std::size_t>(n));
    if (const auto* fixed = std::get_if<FixedCompetences>(&spec)) {
        if (static_cast<int>(fixed->values.size()) != n)
            throw std::invalid_argument("fixed competence list must have exactly n entries");
        for (double p : fixed->values)
            if (!(p >= 0.0 && p <= 1.0))
                throw std::invalid_argument("fixed competences must be in [0, 1]");
        return fixed->values;
    }
    if (const auto* beta = std::get_if<BetaCompetences>(&spec)) {
        if (!(beta->a > 0.0 && beta->b > 0.0))
            throw std::invalid_argument("beta parameters must be positive");
        for (int i = 0; i < n; ++i) result.push_back(beta_sample(eng, beta->a, beta->b));
        return result;
    }
    const auto& uniform = std::get<UniformCompetences>(spec);
    if (!(uniform.lo >= 0.0 && uniform.lo <= uniform.hi && uniform.hi <= 1.0))
        throw std::invalid_argument("uniform competence range must satisfy 0 <= lo <= hi <= 1");
    for (int i = 0; i < n; ++i)
        result.push_back(uniform.lo + uniform01(eng) * (uniform.hi - uniform.lo));
    return result;
}

SocialGraph sample_edges(const EdgeSpec& spec, int n, std::mt19937_64& eng) {
    SocialGraph graph(n);
    if (const auto* model = std::get_if<RandomOutDegree>(&spec)) {
        const int k = model->k;
        if (k < 0) throw std::invalid_argument("out-degree must be non-negative");
        if (k >= n) throw std::invalid_argument("out-degree must be below the agent count");
        for (int i = 0; i < n; ++i) {
            std::set<int> chosen;
            while (static_cast<int>(chosen.size()) < k) {
                int c = uniform_int(eng, 0, n - 2);
                if (c >= i) ++c;  // skip self
                chosen.insert(c);
            }
            for (int j : chosen) graph.add_edge(i, j);
        }
        return graph;
    }
    const auto& model = std::get<PreferentialAttachment>(spec);
    if (model.k < 1) throw std::invalid_argument("attachment degree must be >= 1");
    std::vector<long long> indegree(static_cast<std::size_t>(n), 0);
    for (int i = 1; i < n; ++i) {
        const int picks = std::min(model.k, i);
        std::set<int> chosen;
        while (static_cast<int>(chosen.size()) < picks) {
            long long total = 0;
            for (int j = 0; j < i; ++j)
                if (!chosen.count(j)) total += indegree[static_cast<std::size_t>(j)] + 1;
            long long r = static_cast<long long>(
                uniform_below(eng, static_cast<std::uint64_t>(total)));
            for (int j = 0; j < i; ++j) {
                if (chosen.count(j)) continue;
                r -= indegree[static_cast<std::size_t>(j)] + 1;
                if (r < 0) {
                    chosen.insert(j);
                    break;
                }
            }
        }
        for (int j : chosen) {
            graph.add_edge(i, j);
            ++indegree[static_cast<std::size_t>(j)];
        }
    }
    return graph;
}

std::vector<Role> sample_roles(int n, double delegated_fraction, double preset_share,
                               std::mt19937_64& eng) {
    std::vector<Role> roles(static_cast<std::size_t>(n), Role::DirectOnly);
    for (int i = 0; i < n; ++i) {
        if (uniform01(eng) < delegated_fraction)
            roles[static_cast<std::size_t>(i)] =
                uniform01(eng) < preset_share ? Role::PresetDelegator : Role::Active;
    }
    return roles;
}

}  // namespace

RandomScenario random_scenario(const ScenarioConfig& config) {
    if (config.n < 1) throw std::invalid_argument("agent count must be >= 1");
    if (!(config.preset_delegation_fraction >= 0.0 && config.preset_delegation_fraction <= 1.0))
        throw std::invalid_argument("preset_delegation_fraction must be in [0, 1]");
    if (!(config.preset_share_of_delegations >= 0.0 && config.preset_share_of_delegations <= 1.0))
        throw std::invalid_argument("preset_share_of_delegations must be in [0, 1]");
    if (config.alpha < 0.0) throw std::invalid_argument("alpha must be non-negative");
    if (config.cap && *config.cap < 1) throw std::invalid_argument("cap must be >= 1");

    // independent streams so changing one model does not shift the others
    std::mt19937_64 competence_eng(mix_seed(config.seed, 1));
    std::mt19937_64 edge_eng(mix_seed(config.seed, 2));
    std::mt19937_64 role_eng(mix_seed(config.seed, 3));

    RandomScenario scenario;
    scenario.competences = sample_competences(config.competence, config.n, competence_eng);
    scenario.graph = sample_edges(config.edges, config.n, edge_eng);
    scenario.roles = sample_roles(config.n, config.preset_delegation_fraction,
                                  config.preset_share_of_delegations, role_eng);
    return scenario;
}

}  // namespace liquid
