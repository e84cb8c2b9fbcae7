#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "boostnet/account.hpp"

namespace boostnet {

/// The annotated follower–followee digraph produced by an expansion run.
/// Immutable by convention after construction; analytics below are pure.
struct NetworkSnapshot {
    std::map<AccountId, AccountRecord> accounts;
    std::set<DirectedEdge> edges;
    std::vector<AccountId> seeds;
    std::chrono::system_clock::time_point created_at;
    int expansion_depth = 1;
};

/// Assembles a snapshot from raw collections, deduplicating edges and
/// account entries (the later record wins). Seed membership is stamped
/// onto the matching records.
///
/// Throws InvariantError on an empty seed list, a seed or edge endpoint
/// that is missing from the accounts, or a labeled record without scores.
NetworkSnapshot build_network(const std::vector<AccountRecord>& accounts,
                              const std::vector<DirectedEdge>& edges,
                              const std::vector<AccountId>& seeds,
                              int expansion_depth,
                              std::chrono::system_clock::time_point created_at =
                                  std::chrono::system_clock::now());

struct NetworkStats {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    // total degree (in + out) -> number of nodes with that degree
    std::map<std::size_t, std::size_t> degree_histogram;
};

NetworkStats network_stats(const NetworkSnapshot& snapshot);

/// Keeps the nodes whose total degree in the ORIGINAL snapshot is at least
/// min_degree, plus the edges with both endpoints retained.
NetworkSnapshot degree_filter(const NetworkSnapshot& snapshot, std::size_t min_degree);

/// Renders 100*part/whole as "X.XX %", rounded half-to-even at two
/// decimals using exact integer arithmetic. Requires 0 <= part <= whole
/// and whole > 0.
std::string percentage_of(std::int64_t part, std::int64_t whole);

struct SnapshotIntersection {
    std::set<AccountId> shared_ids;
    // labeled socialbot in BOTH snapshots (the reported floor)
    std::set<AccountId> shared_bot_ids;
};

SnapshotIntersection intersect_snapshots(const NetworkSnapshot& a, const NetworkSnapshot& b);

}  // namespace boostnet
