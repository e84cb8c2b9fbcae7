#include "boostnet/snapshot.hpp"

#include <cinttypes>
#include <cstdio>

namespace boostnet {

NetworkSnapshot build_network(const std::vector<AccountRecord>& accounts,
                              const std::vector<DirectedEdge>& edges,
                              const std::vector<AccountId>& seeds,
                              int expansion_depth,
                              std::chrono::system_clock::time_point created_at) {
    if (seeds.empty()) {
        throw InvariantError("seed list must be non-empty");
    }
    if (expansion_depth < 1) {
        throw InvariantError("expansion depth must be positive");
    }

    NetworkSnapshot snapshot;
    snapshot.created_at = created_at;
    snapshot.expansion_depth = expansion_depth;

    for (const AccountRecord& record : accounts) {
        validate(record);
        snapshot.accounts.insert_or_assign(record.id, record);  // later record wins
    }

    for (const DirectedEdge& edge : edges) {
        if (edge.follower == edge.followee) {
            throw InvariantError("self-follow rejected for account " + edge.follower.value);
        }
        if (!snapshot.accounts.contains(edge.follower)) {
            throw InvariantError("edge endpoint missing from accounts: " + edge.follower.value);
        }
        if (!snapshot.accounts.contains(edge.followee)) {
            throw InvariantError("edge endpoint missing from accounts: " + edge.followee.value);
        }
        snapshot.edges.insert(edge);
    }

    for (const AccountId& seed : seeds) {
        auto it = snapshot.accounts.find(seed);
        if (it == snapshot.accounts.end()) {
            throw InvariantError("seed missing from accounts: " + seed.value);
        }
        it->second.is_seed = true;
        snapshot.seeds.push_back(seed);
    }

    return snapshot;
}

namespace {

std::map<AccountId, std::size_t> total_degrees(const NetworkSnapshot& snapshot) {
    std::map<AccountId, std::size_t> degree;
    for (const auto& [id, record] : snapshot.accounts) {
        degree[id] = 0;
    }
    for (const DirectedEdge& edge : snapshot.edges) {
        ++degree[edge.follower];
        ++degree[edge.followee];
    }
    return degree;
}

}  // namespace

NetworkStats network_stats(const NetworkSnapshot& snapshot) {
    NetworkStats stats;
    stats.node_count = snapshot.accounts.size();
    stats.edge_count = snapshot.edges.size();
    for (const auto& [id, deg] : total_degrees(snapshot)) {
        ++stats.degree_histogram[deg];
    }
    return stats;
}

NetworkSnapshot degree_filter(const NetworkSnapshot& snapshot, std::size_t min_degree) {
    const auto degree = total_degrees(snapshot);

    NetworkSnapshot filtered;
    filtered.created_at = snapshot.created_at;
    filtered.expansion_depth = snapshot.expansion_depth;

    for (const auto& [id, record] : snapshot.accounts) {
        if (degree.at(id) >= min_degree) {
            filtered.accounts.emplace(id, record);
        }
    }
    for (const DirectedEdge& edge : snapshot.edges) {
        if (filtered.accounts.contains(edge.follower) && filtered.accounts.contains(edge.followee)) {
            filtered.edges.insert(edge);
        }
    }
    for (const AccountId& seed : snapshot.seeds) {
        if (filtered.accounts.contains(seed)) {
            filtered.seeds.push_back(seed);
        }
    }
    return filtered;
}

std::string percentage_of(std::int64_t part, std::int64_t whole) {
    if (whole == 0) {
        throw InvariantError("percentage_of: whole must be non-zero");
    }
    if (whole < 0 || part < 0 || part > whole) {
        throw InvariantError("percentage_of: need 0 <= part <= whole");
    }

    // hundredths of a percent, exact rational round-half-to-even
    const std::int64_t numerator = 10000 * part;
    std::int64_t quotient = numerator / whole;
    const std::int64_t remainder = numerator % whole;
    if (2 * remainder > whole) {
        ++quotient;
    } else if (2 * remainder == whole && (quotient % 2) != 0) {
        ++quotient;
    }

    char buf[48];
    std::snprintf(buf, sizeof buf, "%" PRId64 ".%02" PRId64 " %%", quotient / 100, quotient % 100);
    return buf;
}

SnapshotIntersection intersect_snapshots(const NetworkSnapshot& a, const NetworkSnapshot& b) {
    SnapshotIntersection result;
    for (const auto& [id, record] : a.accounts) {
        auto it = b.accounts.find(id);
        if (it == b.accounts.end()) {
            continue;
        }
        result.shared_ids.insert(id);
        if (record.label == Label::Socialbot && it->second.label == Label::Socialbot) {
            result.shared_bot_ids.insert(id);
        }
    }
    return result;
}

}  // namespace boostnet
