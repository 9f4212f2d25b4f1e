#include "liquid/core.hpp"

#include <algorithm>
#include <set>

namespace liquid {

CycleError::CycleError(int agent)
    : std::runtime_error("delegation cycle through agent " + std::to_string(agent)),
      agent_(agent) {}

NonEdgeError::NonEdgeError(int from, int to)
    : std::runtime_error("delegation " + std::to_string(from) + " -> " + std::to_string(to) +
                         " is not a graph edge"),
      from_(from),
      to_(to) {}

SocialGraph::SocialGraph(int n) {
    if (n < 0) throw std::invalid_argument("agent count must be non-negative");
    out_.resize(static_cast<std::size_t>(n));
}

SocialGraph::SocialGraph(int n, const std::vector<std::pair<int, int>>& edges) : SocialGraph(n) {
    for (const auto& [from, to] : edges) add_edge(from, to);
}

void SocialGraph::add_edge(int from, int to) {
    const int n = size();
    if (from < 0 || from >= n || to < 0 || to >= n)
        throw std::invalid_argument("edge (" + std::to_string(from) + ", " + std::to_string(to) +
                                    ") endpoint out of range");
    if (from == to)
        throw std::invalid_argument("self-loop edge at agent " + std::to_string(from));
    auto& row = out_[from];
    const auto it = std::lower_bound(row.begin(), row.end(), to);
    if (it != row.end() && *it == to)
        throw std::invalid_argument("duplicate edge (" + std::to_string(from) + ", " +
                                    std::to_string(to) + ")");
    row.insert(it, to);
    ++edge_count_;
}

bool SocialGraph::has_edge(int from, int to) const {
    if (from < 0 || from >= size()) return false;
    const auto& row = out_[from];
    return std::binary_search(row.begin(), row.end(), to);
}

std::vector<std::pair<int, int>> SocialGraph::edges() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(static_cast<std::size_t>(edge_count_));
    for (int i = 0; i < size(); ++i)
        for (int j : out_[i]) result.emplace_back(i, j);
    return result;
}

void DelegationProfile::set_delegate(int i, int j) {
    if (j < 0) throw std::invalid_argument("delegation target must be non-negative");
    targets_.at(i) = j;
}

int DelegationProfile::delegation_count() const {
    return static_cast<int>(
        std::count_if(targets_.begin(), targets_.end(), [](int t) { return t != kDirect; }));
}

int Tally::total() const {
    int sum = 0;
    for (const auto& [guru, weight] : weights) sum += weight;
    return sum;
}

int Tally::max_weight() const {
    int best = 0;
    for (const auto& [guru, weight] : weights) best = std::max(best, weight);
    return best;
}

ValidationReport validate_graph(int n, const std::vector<std::pair<int, int>>& edges,
                                const CompetenceVector& competences) {
    using Kind = ValidationIssue::Kind;
    ValidationReport report;
    std::set<std::pair<int, int>> seen;
    for (const auto& edge : edges) {
        const auto [from, to] = edge;
        const std::string name = "(" + std::to_string(from) + ", " + std::to_string(to) + ")";
        if (from < 0 || from >= n || to < 0 || to >= n) {
            report.issues.push_back({Kind::EndpointOutOfRange, "edge " + name + " endpoint out of range"});
        } else if (from == to) {
            report.issues.push_back({Kind::SelfLoop, "edge " + name + " is a self-loop"});
        }
        if (!seen.insert(edge).second)
            report.issues.push_back({Kind::DuplicateEdge, "edge " + name + " appears more than once"});
    }
    if (static_cast<int>(competences.size()) != n) {
        report.issues.push_back({Kind::CompetenceCountMismatch,
                                 "expected " + std::to_string(n) + " competences, got " +
                                     std::to_string(competences.size())});
    }
    for (std::size_t i = 0; i < competences.size(); ++i) {
        const double p = competences[i];
        if (!(p >= 0.0 && p <= 1.0))
            report.issues.push_back({Kind::CompetenceOutOfRange,
                                     "competence of agent " + std::to_string(i) + " outside [0, 1]"});
    }
    return report;
}

std::vector<int> resolve_gurus(const SocialGraph& graph, const DelegationProfile& profile) {
    const int n = graph.size();
    if (profile.size() != n)
        throw std::invalid_argument("profile covers " + std::to_string(profile.size()) +
                                    " agents, graph has " + std::to_string(n));
    enum : unsigned char { kUnseen, kOnPath, kDone };
    std::vector<unsigned char> state(static_cast<std::size_t>(n), kUnseen);
    std::vector<int> guru(static_cast<std::size_t>(n), -1);
    std::vector<int> path;
    for (int start = 0; start < n; ++start) {
        if (state[start] == kDone) continue;
        path.clear();
        int cur = start;
        int terminal = -1;
        for (;;) {
            if (state[cur] == kDone) {
                terminal = guru[cur];
                break;
            }
            if (state[cur] == kOnPath) throw CycleError(cur);
            state[cur] = kOnPath;
            path.push_back(cur);
            const int target = profile.target_of(cur);
            if (target == DelegationProfile::kDirect) {
                terminal = cur;
                break;
            }
            if (!graph.has_edge(cur, target)) throw NonEdgeError(cur, target);
            cur = target;
        }
        for (int v : path) {
            state[v] = kDone;
            guru[v] = terminal;
        }
    }
    return guru;
}

Tally resolve(const SocialGraph& graph, const DelegationProfile& profile) {
    Tally tally;
    for (int g : resolve_gurus(graph, profile)) ++tally.weights[g];
    return tally;
}

Outcome weighted_majority(const Tally& tally, const std::map<int, bool>& guru_votes, int n) {
    if (guru_votes.size() != tally.weights.size())
        throw std::invalid_argument("guru votes must cover exactly the tally's gurus");
    long long correct = 0;
    for (const auto& [guru, weight] : tally.weights) {
        const auto it = guru_votes.find(guru);
        if (it == guru_votes.end())
            throw std::invalid_argument("missing vote for guru " + std::to_string(guru));
        if (it->second) correct += weight;
    }
    return 2 * correct > n ? Outcome::Correct : Outcome::Incorrect;
}

}  // namespace liquid
