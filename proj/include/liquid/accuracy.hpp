#pragma once

#include <cstdint>

#include "liquid/core.hpp"

namespace liquid {

// Guard for the exponential enumeration path.
class TooLargeError : public std::runtime_error {
public:
    explicit TooLargeError(const std::string& what) : std::runtime_error(what) {}
};

enum class AccuracyMethod { ExactDp, ExactEnum, MonteCarlo };

struct AccuracyResult {
    double value = 0.0;
    AccuracyMethod method = AccuracyMethod::ExactDp;
    double std_error = 0.0;  // 0 for exact methods
    long long trials = 0;    // 0 for exact methods
};

// Exact P(correct weight > n/2) given an already-resolved tally.
double exact_accuracy_from_tally(const Tally& tally, const CompetenceVector& competences, int n);

// Exact network accuracy by dynamic programming over the distribution of the
// total correct weight; O(g * n) for g gurus.
AccuracyResult exact_accuracy_dp(const SocialGraph& graph, const CompetenceVector& competences,
                                 const DelegationProfile& profile);

// Same value by summing all 2^g guru-vote outcomes. Oracle for the DP; throws
// TooLargeError beyond 25 gurus.
AccuracyResult exact_accuracy_enum(const SocialGraph& graph, const CompetenceVector& competences,
                                   const DelegationProfile& profile);

// Unbiased Monte Carlo estimate with Wald standard error (approximate near 0
// and 1). Trial t draws all of its randomness from (seed, t), so the estimate
// does not depend on how trials are split across workers.
AccuracyResult mc_accuracy(const SocialGraph& graph, const CompetenceVector& competences,
                           const DelegationProfile& profile, long long trials, std::uint64_t seed);

// Exact P(Binomial(n, p) >= (n+1)/2) for odd n >= 1.
double condorcet_accuracy(int n, double p);

}  // namespace liquid
