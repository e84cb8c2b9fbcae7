#include "boostnet/community.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>
#include <vector>

namespace boostnet {

namespace {
constexpr int kMaxRounds = 200;
}

CommunityAssignment detect_communities(const NetworkSnapshot& snapshot, std::uint64_t rng_seed) {
    if (snapshot.accounts.empty()) {
        throw InvariantError("detect_communities: snapshot has no accounts");
    }

    const std::size_t n = snapshot.accounts.size();
    std::vector<AccountId> ids;
    ids.reserve(n);
    std::unordered_map<AccountId, std::size_t> index_of;
    for (const auto& [id, record] : snapshot.accounts) {
        index_of.emplace(id, ids.size());
        ids.push_back(id);
    }

    std::vector<std::vector<std::size_t>> adjacency(n);
    for (const DirectedEdge& edge : snapshot.edges) {
        const std::size_t u = index_of.at(edge.follower);
        const std::size_t v = index_of.at(edge.followee);
        adjacency[u].push_back(v);
        adjacency[v].push_back(u);
    }

    // Seeded permutation as the initial labeling.
    std::vector<std::size_t> labels(n);
    std::iota(labels.begin(), labels.end(), std::size_t{0});
    std::mt19937_64 rng(rng_seed);
    for (std::size_t i = n; i > 1; --i) {
        std::size_t j = rng() % i;
        std::swap(labels[i - 1], labels[j]);
    }

    std::vector<std::size_t> previous;
    std::vector<std::size_t> next(n);
    std::unordered_map<std::size_t, std::size_t> freq;
    for (int round = 0; round < kMaxRounds; ++round) {
        bool changed = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (adjacency[v].empty()) {
                next[v] = labels[v];
                continue;
            }
            freq.clear();
            ++freq[labels[v]];  // self-vote keeps adjacent pairs from swapping forever
            for (std::size_t u : adjacency[v]) {
                ++freq[labels[u]];
            }
            std::size_t best_label = labels[v];
            std::size_t best_count = 0;
            for (const auto& [label, count] : freq) {
                if (count > best_count || (count == best_count && label < best_label)) {
                    best_label = label;
                    best_count = count;
                }
            }
            next[v] = best_label;
            changed = changed || next[v] != labels[v];
        }
        if (!changed) {
            break;
        }
        // 2-cycle oscillations are possible under synchronous updates;
        // stop when the labeling repeats with period two.
        if (!previous.empty() && next == previous) {
            labels.swap(next);
            break;
        }
        previous = labels;
        labels.swap(next);
    }

    // Densify in first-occurrence order over id-sorted accounts.
    CommunityAssignment assignment;
    std::unordered_map<std::size_t, std::size_t> dense;
    for (std::size_t v = 0; v < n; ++v) {
        auto [it, inserted] = dense.emplace(labels[v], dense.size());
        assignment.community_of.emplace(ids[v], it->second);
    }
    assignment.community_count = dense.size();
    return assignment;
}

}  // namespace boostnet
