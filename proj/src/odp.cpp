#include "liquid/odp.hpp"

#include <algorithm>
#include <limits>

#include "liquid/accuracy.hpp"
#include "liquid/rng.hpp"

namespace liquid {

long long profile_space_size(const SocialGraph& graph) {
    long long space = 1;
    for (int i = 0; i < graph.size(); ++i) {
        const long long options = 1 + static_cast<long long>(graph.out_neighbors(i).size());
        if (space > std::numeric_limits<long long>::max() / options)
            return std::numeric_limits<long long>::max();
        space *= options;
    }
    return space;
}

void for_each_profile(const SocialGraph& graph, std::optional<int> cap,
                      const std::function<void(const DelegationProfile&, const Tally&)>& visit) {
    if (cap && *cap < 1) throw std::invalid_argument("cap must be >= 1");
    const long long space = profile_space_size(graph);
    if (space > kMaxProfileSpace)
        throw SearchSpaceTooLarge("profile space of " + std::to_string(space) +
                                  " raw combinations exceeds the limit of " +
                                  std::to_string(kMaxProfileSpace));
    const int n = graph.size();
    // option 0 is direct; delegations follow in ascending target order, so the
    // odometer walks action vectors in lexicographic order
    std::vector<std::size_t> index(static_cast<std::size_t>(n), 0);
    DelegationProfile profile(n);
    for (;;) {
        try {
            const Tally tally = resolve(graph, profile);
            if (!cap || tally.max_weight() <= *cap) visit(profile, tally);
        } catch (const CycleError&) {
            // cyclic combination; skip
        }
        int pos = n - 1;
        while (pos >= 0) {
            const auto& neighbors = graph.out_neighbors(pos);
            if (index[pos] < neighbors.size()) {
                ++index[pos];
                profile.set_delegate(pos, neighbors[index[pos] - 1]);
                break;
            }
            index[pos] = 0;
            profile.set_direct(pos);
            --pos;
        }
        if (pos < 0) return;
    }
}

std::vector<DelegationProfile> enumerate_profiles(const SocialGraph& graph,
                                                  std::optional<int> cap) {
    std::vector<DelegationProfile> profiles;
    for_each_profile(graph, cap,
                     [&](const DelegationProfile& profile, const Tally&) { profiles.push_back(profile); });
    return profiles;
}

OdpSolution solve_bruteforce(const SocialGraph& graph, const CompetenceVector& competences,
                             std::optional<int> cap) {
    if (static_cast<int>(competences.size()) != graph.size())
        throw std::invalid_argument("competence count does not match the graph");
    OdpSolution best;
    best.cap = cap;
    best.profile = DelegationProfile::all_direct(graph.size());
    best.accuracy = -1.0;
    for_each_profile(graph, cap, [&](const DelegationProfile& profile, const Tally& tally) {
        ++best.feasible_count;
        const double accuracy = exact_accuracy_from_tally(tally, competences, graph.size());
        if (accuracy > best.accuracy) {  // first hit keeps the lexicographic minimum
            best.accuracy = accuracy;
            best.profile = profile;
        }
    });
    if (best.accuracy < 0.0) best.accuracy = 0.0;  // n == 0 only
    return best;
}

namespace {

std::optional<double> evaluate_profile(const SocialGraph& graph,
                                       const CompetenceVector& competences,
                                       const DelegationProfile& profile, std::optional<int> cap) {
    try {
        const Tally tally = resolve(graph, profile);
        if (cap && tally.max_weight() > *cap) return std::nullopt;
        return exact_accuracy_from_tally(tally, competences, graph.size());
    } catch (const CycleError&) {
        return std::nullopt;
    }
}

}  // namespace

OdpSolution solve_local_search(const SocialGraph& graph, const CompetenceVector& competences,
                               std::optional<int> cap, long long iterations, std::uint64_t seed) {
    if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
    if (cap && *cap < 1) throw std::invalid_argument("cap must be >= 1");
    if (static_cast<int>(competences.size()) != graph.size())
        throw std::invalid_argument("competence count does not match the graph");

    const int n = graph.size();
    std::mt19937_64 eng(seed);
    long long evaluations = 0;

    const auto evaluate = [&](const DelegationProfile& profile) {
        const auto accuracy = evaluate_profile(graph, competences, profile, cap);
        if (accuracy) ++evaluations;
        return accuracy;
    };

    const auto random_valid_profile = [&]() {
        DelegationProfile profile(n);
        for (int i = 0; i < n; ++i) {
            const auto& neighbors = graph.out_neighbors(i);
            const int pick = uniform_int(eng, 0, static_cast<int>(neighbors.size()));
            if (pick > 0) profile.set_delegate(i, neighbors[static_cast<std::size_t>(pick - 1)]);
        }
        // strip random delegations until the draw is acyclic and under the cap
        while (!evaluate_profile(graph, competences, profile, cap)) {
            std::vector<int> delegating;
            for (int i = 0; i < n; ++i)
                if (!profile.is_direct(i)) delegating.push_back(i);
            profile.set_direct(delegating[static_cast<std::size_t>(
                uniform_int(eng, 0, static_cast<int>(delegating.size()) - 1))]);
        }
        return profile;
    };

    const DelegationProfile all_direct = DelegationProfile::all_direct(n);
    const double all_direct_accuracy = n == 0 ? 0.0 : *evaluate(all_direct);

    DelegationProfile current = n == 0 ? all_direct : random_valid_profile();
    double current_accuracy = n == 0 ? all_direct_accuracy : *evaluate(current);
    DelegationProfile best = current;
    double best_accuracy = current_accuracy;

    const long long stall_limit = std::max<long long>(20, 4LL * n);
    long long stall = 0;
    for (long long it = 0; n > 0 && it < iterations; ++it) {
        const int agent = uniform_int(eng, 0, n - 1);
        const auto& neighbors = graph.out_neighbors(agent);
        const int pick = uniform_int(eng, 0, static_cast<int>(neighbors.size()));
        const int target =
            pick == 0 ? DelegationProfile::kDirect : neighbors[static_cast<std::size_t>(pick - 1)];
        if (target != current.target_of(agent)) {
            DelegationProfile candidate = current;
            if (target == DelegationProfile::kDirect)
                candidate.set_direct(agent);
            else
                candidate.set_delegate(agent, target);
            const auto accuracy = evaluate(candidate);
            if (accuracy && *accuracy > current_accuracy) {
                current = std::move(candidate);
                current_accuracy = *accuracy;
                stall = 0;
                if (current_accuracy > best_accuracy) {
                    best = current;
                    best_accuracy = current_accuracy;
                }
                continue;
            }
        }
        if (++stall > stall_limit) {  // restart from a fresh random point
            current = random_valid_profile();
            current_accuracy = *evaluate(current);
            stall = 0;
            if (current_accuracy > best_accuracy) {
                best = current;
                best_accuracy = current_accuracy;
            }
        }
    }

    if (best_accuracy < all_direct_accuracy) {
        best = all_direct;
        best_accuracy = all_direct_accuracy;
    }
    return {best, best_accuracy, evaluations, cap};
}

}  // namespace liquid
