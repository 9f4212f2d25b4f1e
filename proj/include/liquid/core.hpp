#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liquid {

// competences[i] is agent i's probability of voting for the ground truth.
using CompetenceVector = std::vector<double>;

struct Agent {
    int id = 0;
    double competence = 0.0;
};

// A delegation chain loops back on itself; `agent` lies on the cycle.
class CycleError : public std::runtime_error {
public:
    explicit CycleError(int agent);
    int agent() const noexcept { return agent_; }

private:
    int agent_;
};

// A profile delegates along a pair that is not a graph edge.
class NonEdgeError : public std::runtime_error {
public:
    NonEdgeError(int from, int to);
    int from() const noexcept { return from_; }
    int to() const noexcept { return to_; }

private:
    int from_;
    int to_;
};

// Directed permissible-delegation edges over agents 0..n-1.
// Immutable in practice once built; no self-loops or duplicate edges.
class SocialGraph {
public:
    SocialGraph() = default;
    explicit SocialGraph(int n);
    SocialGraph(int n, const std::vector<std::pair<int, int>>& edges);

    int size() const noexcept { return static_cast<int>(out_.size()); }
    int edge_count() const noexcept { return edge_count_; }

    void add_edge(int from, int to);
    bool has_edge(int from, int to) const;

    // Ascending target ids.
    const std::vector<int>& out_neighbors(int i) const { return out_.at(i); }
    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<std::vector<int>> out_;
    int edge_count_ = 0;
};

// Per-agent action: vote directly (kDirect) or delegate to one out-neighbor.
// Whether a target is actually a graph edge is checked at resolution time.
class DelegationProfile {
public:
    static constexpr int kDirect = -1;

    DelegationProfile() = default;
    explicit DelegationProfile(int n) : targets_(n, kDirect) {}
    static DelegationProfile all_direct(int n) { return DelegationProfile(n); }

    int size() const noexcept { return static_cast<int>(targets_.size()); }
    bool is_direct(int i) const { return targets_.at(i) == kDirect; }
    int target_of(int i) const { return targets_.at(i); }
    void set_direct(int i) { targets_.at(i) = kDirect; }
    void set_delegate(int i, int j);
    int delegation_count() const;
    const std::vector<int>& targets() const noexcept { return targets_; }

    friend bool operator==(const DelegationProfile&, const DelegationProfile&) = default;

private:
    std::vector<int> targets_;
};

// Resolved voting weights: guru id -> 1 + delegations received (transitively).
struct Tally {
    std::map<int, int> weights;

    int total() const;
    int max_weight() const;
    int guru_count() const noexcept { return static_cast<int>(weights.size()); }
};

enum class Outcome { Correct, Incorrect };

struct VoteOutcome {
    std::map<int, bool> guru_votes;  // guru id -> voted for the ground truth
    Outcome result = Outcome::Incorrect;
};

struct ValidationIssue {
    enum class Kind {
        SelfLoop,
        EndpointOutOfRange,
        DuplicateEdge,
        CompetenceOutOfRange,
        CompetenceCountMismatch,
    };
    Kind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const noexcept { return issues.empty(); }
};

// Report-style checks over raw graph input. Never throws.
ValidationReport validate_graph(int n, const std::vector<std::pair<int, int>>& edges,
                                const CompetenceVector& competences);

// Terminal direct voter of each agent's delegation chain.
// Throws CycleError / NonEdgeError.
std::vector<int> resolve_gurus(const SocialGraph& graph, const DelegationProfile& profile);

// Guru weights for a profile; weights always sum to graph.size().
Tally resolve(const SocialGraph& graph, const DelegationProfile& profile);

// Correct iff the weight behind correct gurus strictly exceeds n/2; ties lose.
// guru_votes must cover exactly the tally's gurus.
Outcome weighted_majority(const Tally& tally, const std::map<int, bool>& guru_votes, int n);

}  // namespace liquid
