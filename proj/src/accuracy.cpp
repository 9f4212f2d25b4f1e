#include "liquid/accuracy.hpp"

#include <algorithm>
#include <cmath>

#include "liquid/rng.hpp"

namespace liquid {

namespace {

struct GuruDistribution {
    std::vector<double> p;  // competence per guru, ascending guru id
    std::vector<int> w;     // voting weight per guru
    int n = 0;
};

GuruDistribution guru_distribution(const SocialGraph& graph, const CompetenceVector& competences,
                                   const DelegationProfile& profile) {
    if (static_cast<int>(competences.size()) != graph.size())
        throw std::invalid_argument("competence count does not match the graph");
    const Tally tally = resolve(graph, profile);
    GuruDistribution dist;
    dist.n = graph.size();
    dist.p.reserve(tally.weights.size());
    dist.w.reserve(tally.weights.size());
    for (const auto& [guru, weight] : tally.weights) {
        dist.p.push_back(competences[static_cast<std::size_t>(guru)]);
        dist.w.push_back(weight);
    }
    return dist;
}

double dp_over_weights(const std::vector<double>& p, const std::vector<int>& w, int n) {
    std::vector<double> dist(static_cast<std::size_t>(n) + 1, 0.0);
    dist[0] = 1.0;
    int reach = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const double pk = p[k];
        const int wk = w[k];
        for (int v = reach; v >= 0; --v) {
            const double mass = dist[v];
            if (mass == 0.0) continue;
            dist[v + wk] += mass * pk;
            dist[v] = mass * (1.0 - pk);
        }
        reach += wk;
    }
    double correct = 0.0;
    for (int v = reach; v >= 0 && 2 * v > n; --v) correct += dist[v];
    return std::clamp(correct, 0.0, 1.0);
}

}  // namespace

double exact_accuracy_from_tally(const Tally& tally, const CompetenceVector& competences, int n) {
    std::vector<double> p;
    std::vector<int> w;
    p.reserve(tally.weights.size());
    w.reserve(tally.weights.size());
    for (const auto& [guru, weight] : tally.weights) {
        if (guru < 0 || guru >= static_cast<int>(competences.size()))
            throw std::invalid_argument("tally guru outside the competence vector");
        p.push_back(competences[static_cast<std::size_t>(guru)]);
        w.push_back(weight);
    }
    return dp_over_weights(p, w, n);
}

AccuracyResult exact_accuracy_dp(const SocialGraph& graph, const CompetenceVector& competences,
                                 const DelegationProfile& profile) {
    const GuruDistribution dist = guru_distribution(graph, competences, profile);
    return {dp_over_weights(dist.p, dist.w, dist.n), AccuracyMethod::ExactDp, 0.0, 0};
}

AccuracyResult exact_accuracy_enum(const SocialGraph& graph, const CompetenceVector& competences,
                                   const DelegationProfile& profile) {
    const GuruDistribution dist = guru_distribution(graph, competences, profile);
    const int g = static_cast<int>(dist.p.size());
    if (g > 25)
        throw TooLargeError("enumeration over " + std::to_string(g) + " gurus; the limit is 25");
    long double total = 0.0L;
    // depth-first over guru outcomes, reusing partial products
    struct Walker {
        const GuruDistribution& dist;
        int g;
        long double& total;
        void operator()(int idx, long double prob, int weight) const {
            if (prob == 0.0L) return;
            if (idx == g) {
                if (2 * weight > dist.n) total += prob;
                return;
            }
            const long double pk = dist.p[static_cast<std::size_t>(idx)];
            (*this)(idx + 1, prob * pk, weight + dist.w[static_cast<std::size_t>(idx)]);
            (*this)(idx + 1, prob * (1.0L - pk), weight);
        }
    };
    Walker{dist, g, total}(0, 1.0L, 0);
    const double value = std::clamp(static_cast<double>(total), 0.0, 1.0);
    return {value, AccuracyMethod::ExactEnum, 0.0, 0};
}

AccuracyResult mc_accuracy(const SocialGraph& graph, const CompetenceVector& competences,
                           const DelegationProfile& profile, long long trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const GuruDistribution dist = guru_distribution(graph, competences, profile);
    const int g = static_cast<int>(dist.p.size());
    const int n = dist.n;
    long long hits = 0;
    for (long long t = 0; t < trials; ++t) {
        SplitMix rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
        int weight = 0;
        for (int k = 0; k < g; ++k)
            if (rng.uniform01() < dist.p[static_cast<std::size_t>(k)])
                weight += dist.w[static_cast<std::size_t>(k)];
        if (2 * weight > n) ++hits;
    }
    const double estimate = static_cast<double>(hits) / static_cast<double>(trials);
    const double wald = std::sqrt(estimate * (1.0 - estimate) / static_cast<double>(trials));
    return {estimate, AccuracyMethod::MonteCarlo, wald, trials};
}

double condorcet_accuracy(int n, double p) {
    if (n < 1) throw std::invalid_argument("jury size must be >= 1");
    if (n % 2 == 0) throw std::invalid_argument("jury size must be odd");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("competence must be in [0, 1]");
    if (p == 0.0) return 0.0;
    if (p == 1.0) return 1.0;
    const int m = (n + 1) / 2;
    const double log_p = std::log(p);
    const double log_q = std::log1p(-p);
    const double log_fact_n = std::lgamma(n + 1.0);
    double sum = 0.0;
    double comp = 0.0;  // Kahan
    for (int k = m; k <= n; ++k) {
        const double log_term = log_fact_n - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) +
                                k * log_p + (n - k) * log_q;
        const double term = std::exp(log_term);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return std::clamp(sum, 0.0, 1.0);
}

}  // namespace liquid
