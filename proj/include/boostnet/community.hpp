#pragma once

#include <cstdint>
#include <map>

#include "boostnet/snapshot.hpp"

namespace boostnet {

/// Dense 0-based community assignment covering every snapshot account.
struct CommunityAssignment {
    std::map<AccountId, std::size_t> community_of;
    std::size_t community_count = 0;
};

/// Synchronous label propagation over the undirected view of the edge set.
/// Initial labels are a seeded permutation; frequency ties break to the
/// lowest label. Isolated nodes keep their own label and end up as
/// singleton communities. Deterministic for a fixed rng_seed.
CommunityAssignment detect_communities(const NetworkSnapshot& snapshot, std::uint64_t rng_seed);

}  // namespace boostnet
