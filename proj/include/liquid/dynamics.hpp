#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "liquid/core.hpp"
#include "liquid/scenarios.hpp"

namespace liquid {

struct TrustCounter {
    long long successes = 0;
    long long failures = 0;

    // Laplace-smoothed success ratio; stays in (0, 1) and starts at 1/2.
    double score() const noexcept {
        return (successes + 1.0) / (successes + failures + 2.0);
    }
};

// Per-edge trust counters plus each agent's record of its own direct votes.
class TrustState {
public:
    explicit TrustState(const SocialGraph& graph);

    const TrustCounter& edge(int from, int to) const;
    TrustCounter& edge(int from, int to);
    const TrustCounter& self(int agent) const { return self_.at(agent); }
    TrustCounter& self(int agent) { return self_.at(agent); }

private:
    std::unordered_map<std::uint64_t, TrustCounter> edges_;
    std::vector<TrustCounter> self_;
};

struct EpochRecord {
    long long epoch = 0;
    DelegationProfile profile;
    Outcome result = Outcome::Incorrect;
    double accuracy = 0.0;  // exact, for the profile used
    double neg_alpha_fraction = 0.0;
    int max_guru_weight = 0;
    int guru_count = 0;
};

struct DynamicsScenario {
    SocialGraph graph;
    CompetenceVector competences;
    std::vector<Role> roles;
    double alpha = 0.10;
    std::optional<int> cap;
};

// Trust-greedy profile construction. Preset delegators take their best-trusted
// feasible neighbor (ties to the lowest id); active agents additionally go
// direct when their own-vote estimate exceeds the best remaining neighbor's
// score. Choices that would close a cycle or push a guru past the cap fall to
// the next-best neighbor, then to direct. Always yields a valid profile.
DelegationProfile choose_delegations(const TrustState& trust, const SocialGraph& graph,
                                     const std::vector<Role>& roles, std::optional<int> cap,
                                     std::uint64_t seed);

// One poll: build the profile, sample guru votes by competence, settle the
// weighted majority, and update trust along every used delegation edge from
// the vote of the guru its chain terminated at.
EpochRecord run_epoch(TrustState& trust, const DynamicsScenario& scenario,
                      std::uint64_t epoch_seed);

// Repeated polls on a freshly generated scenario; deterministic per seed.
std::vector<EpochRecord> run_simulation(const ScenarioConfig& config, long long epochs,
                                        std::uint64_t seed);

}  // namespace liquid
