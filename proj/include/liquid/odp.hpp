#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "liquid/core.hpp"

namespace liquid {

class SearchSpaceTooLarge : public std::runtime_error {
public:
    explicit SearchSpaceTooLarge(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr long long kMaxProfileSpace = 10'000'000;

// Product over agents of (1 + out-degree), saturating at LLONG_MAX.
long long profile_space_size(const SocialGraph& graph);

// Visits every acyclic edge-respecting profile in lexicographic action order
// (direct before delegation, targets ascending). With a cap, profiles whose
// tally has any guru weight above it are skipped. Throws SearchSpaceTooLarge
// when the raw combination count exceeds kMaxProfileSpace.
void for_each_profile(const SocialGraph& graph, std::optional<int> cap,
                      const std::function<void(const DelegationProfile&, const Tally&)>& visit);

// Materialized variant; intended for small instances.
std::vector<DelegationProfile> enumerate_profiles(const SocialGraph& graph,
                                                  std::optional<int> cap = std::nullopt);

struct OdpSolution {
    DelegationProfile profile;
    double accuracy = 0.0;
    long long feasible_count = 0;  // valid profiles examined
    std::optional<int> cap;
};

// Globally optimal profile by exhaustive search; ties broken toward the
// lexicographically smallest action vector.
OdpSolution solve_bruteforce(const SocialGraph& graph, const CompetenceVector& competences,
                             std::optional<int> cap = std::nullopt);

// Restarting hill climb over single-agent action changes. Deterministic per
// seed; never returns less than the all-direct accuracy.
OdpSolution solve_local_search(const SocialGraph& graph, const CompetenceVector& competences,
                               std::optional<int> cap, long long iterations, std::uint64_t seed);

}  // namespace liquid
