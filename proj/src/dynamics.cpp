#include "liquid/dynamics.hpp"

#include <algorithm>
#include <numeric>

#include "liquid/accuracy.hpp"
#include "liquid/rng.hpp"

namespace liquid {

namespace {

std::uint64_t edge_key(int from, int to) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(from)) << 32) |
           static_cast<std::uint32_t>(to);
}

}  // namespace

TrustState::TrustState(const SocialGraph& graph) : self_(static_cast<std::size_t>(graph.size())) {
    for (int i = 0; i < graph.size(); ++i)
        for (int j : graph.out_neighbors(i)) edges_.emplace(edge_key(i, j), TrustCounter{});
}

const TrustCounter& TrustState::edge(int from, int to) const {
    const auto it = edges_.find(edge_key(from, to));
    if (it == edges_.end())
        throw std::invalid_argument("no trust entry for edge (" + std::to_string(from) + ", " +
                                    std::to_string(to) + ")");
    return it->second;
}

TrustCounter& TrustState::edge(int from, int to) {
    const auto it = edges_.find(edge_key(from, to));
    if (it == edges_.end())
        throw std::invalid_argument("no trust entry for edge (" + std::to_string(from) + ", " +
                                    std::to_string(to) + ")");
    return it->second;
}

DelegationProfile choose_delegations(const TrustState& trust, const SocialGraph& graph,
                                     const std::vector<Role>& roles, std::optional<int> cap,
                                     std::uint64_t seed) {
    const int n = graph.size();
    if (static_cast<int>(roles.size()) != n)
        throw std::invalid_argument("role count does not match the graph");
    if (cap && *cap < 1) throw std::invalid_argument("cap must be >= 1");

    DelegationProfile profile(n);
    // resolved guru weights tracked incrementally; entries of agents that have
    // delegated are stale and never read again
    std::vector<long long> weight(static_cast<std::size_t>(n), 1);

    // agents settle their choices in seeded arrival order
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 eng(seed);
    for (int i = n - 1; i > 0; --i)
        std::swap(order[static_cast<std::size_t>(i)],
                  order[uniform_below(eng, static_cast<std::uint64_t>(i) + 1)]);

    const auto terminal_guru = [&](int start, int avoid) -> int {
        int cur = start;
        for (;;) {
            if (cur == avoid) return -1;  // would close a cycle
            const int target = profile.target_of(cur);
            if (target == DelegationProfile::kDirect) return cur;
            cur = target;
        }
    };

    std::vector<int> candidates;
    for (int i : order) {
        if (roles[static_cast<std::size_t>(i)] == Role::DirectOnly) continue;
        const auto& neighbors = graph.out_neighbors(i);
        if (neighbors.empty()) continue;

        // descending trust, ties toward the lowest id (input is id-ascending)
        candidates.assign(neighbors.begin(), neighbors.end());
        std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
            return trust.edge(i, a).score() > trust.edge(i, b).score();
        });

        const bool active = roles[static_cast<std::size_t>(i)] == Role::Active;
        const double self_score = trust.self(i).score();
        for (int j : candidates) {
            if (active && self_score > trust.edge(i, j).score()) break;
            const int guru = terminal_guru(j, i);
            if (guru < 0) continue;
            if (cap && weight[static_cast<std::size_t>(guru)] + weight[static_cast<std::size_t>(i)] >
                           *cap)
                continue;
            profile.set_delegate(i, j);
            weight[static_cast<std::size_t>(guru)] += weight[static_cast<std::size_t>(i)];
            break;
        }
    }
    return profile;
}

EpochRecord run_epoch(TrustState& trust, const DynamicsScenario& scenario,
                      std::uint64_t epoch_seed) {
    const SocialGraph& graph = scenario.graph;
    const int n = graph.size();
    if (static_cast<int>(scenario.competences.size()) != n ||
        static_cast<int>(scenario.roles.size()) != n)
        throw std::invalid_argument("scenario fields do not match the graph size");

    EpochRecord record;
    record.profile =
        choose_delegations(trust, graph, scenario.roles, scenario.cap, mix_seed(epoch_seed, 1));

    const std::vector<int> gurus = resolve_gurus(graph, record.profile);
    Tally tally;
    for (int g : gurus) ++tally.weights[g];
    record.max_guru_weight = tally.max_weight();
    record.guru_count = tally.guru_count();
    record.accuracy = exact_accuracy_from_tally(tally, scenario.competences, n);

    // ground truth is fixed per poll; guru votes are independent by competence
    std::mt19937_64 vote_eng(mix_seed(epoch_seed, 2));
    std::map<int, bool> votes;
    for (const auto& [guru, w] : tally.weights)
        votes[guru] = uniform01(vote_eng) < scenario.competences[static_cast<std::size_t>(guru)];
    record.result = weighted_majority(tally, votes, n);

    int delegations = 0;
    int negative = 0;
    for (int i = 0; i < n; ++i) {
        const int target = record.profile.target_of(i);
        if (target == DelegationProfile::kDirect) {
            auto& own = trust.self(i);
            ++(votes.at(i) ? own.successes : own.failures);
            continue;
        }
        ++delegations;
        if (classify_delegation(scenario.competences[static_cast<std::size_t>(i)],
                                scenario.competences[static_cast<std::size_t>(target)],
                                scenario.alpha) == DelegationClass::NegativeAlpha)
            ++negative;
        // only the guru's vote is observable; the edge inherits its outcome
        auto& counter = trust.edge(i, target);
        ++(votes.at(gurus[static_cast<std::size_t>(i)]) ? counter.successes : counter.failures);
    }
    record.neg_alpha_fraction =
        delegations == 0 ? 0.0 : static_cast<double>(negative) / delegations;
    return record;
}

std::vector<EpochRecord> run_simulation(const ScenarioConfig& config, long long epochs,
                                        std::uint64_t seed) {
    if (epochs < 1) throw std::invalid_argument("epochs must be >= 1");
    ScenarioConfig effective = config;
    effective.seed = mix_seed(seed, 1);
    RandomScenario generated = random_scenario(effective);
    const DynamicsScenario scenario{std::move(generated.graph), std::move(generated.competences),
                                    std::move(generated.roles), config.alpha, config.cap};
    TrustState trust(scenario.graph);
    std::vector<EpochRecord> records;
    records.reserve(static_cast<std::size_t>(epochs));
    for (long long epoch = 0; epoch < epochs; ++epoch) {
        EpochRecord record =
            run_epoch(trust, scenario, mix_seed(seed, 16 + static_cast<std::uint64_t>(epoch)));
        record.epoch = epoch;
        records.push_back(std::move(record));
    }
    return records;
}

}  // namespace liquid
