#pragma once

#include <deque>
#include <filesystem>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "boostnet/provider.hpp"
#include "boostnet/snapshot.hpp"

namespace boostnet {

/// Ordered, duplicate-free expansion starting points.
struct SeedSet {
    std::vector<AccountId> ids;

    // Deduplicates preserving first occurrence; throws on an empty result.
    static SeedSet from_ids(std::vector<AccountId> ids);
    // One id per line, '#' comments.
    static SeedSet load(const std::filesystem::path& path);
};

struct ExpansionPolicy {
    int follower_depth = 1;  // 1 or 2 (2 = also followers of depth-1 followers)
    bool collect_followees_of_seeds = true;
    std::optional<long> per_account_page_limit;  // nullopt = unlimited

    void validate() const;
};

struct PendingFetch {
    AccountId id;
    Relation relation = Relation::Followers;
    std::optional<std::string> cursor;  // nullopt = start of listing
    int hop = 1;
    long pages_done = 0;
};

/// Resumable crawl bookkeeping. Persisted as a single versioned JSON
/// document; loading re-checks every invariant.
struct CrawlState {
    ExpansionPolicy policy;
    std::vector<AccountId> seeds;
    std::deque<PendingFetch> frontier;
    std::set<std::pair<AccountId, Relation>> visited;
    std::map<AccountId, FetchStatus> accounts;
    std::set<DirectedEdge> edges;

    bool complete() const { return frontier.empty(); }

    // Throws CorruptStateError when internal consistency fails.
    void validate() const;

    std::string to_json_string() const;
    static CrawlState from_json_string(const std::string& text);
    void save(const std::filesystem::path& path) const;
    static CrawlState load(const std::filesystem::path& path);
};

struct CrawlOptions {
    RetryPolicy retry;
    SleepFn sleep = real_sleep();
    int max_in_flight = 4;
    // stop (resumably) after this many provider requests; -1 = run to completion
    long max_requests = -1;
    std::uint64_t rng_seed = 0;  // backoff jitter stream
};

struct ExpansionResult {
    std::map<AccountId, FetchStatus> accounts;
    std::set<DirectedEdge> edges;
    CrawlState state;
};

/// Runs the expansion: followers of every seed (edge follower→seed),
/// followees of every seed when enabled (edge seed→followee), and at
/// depth 2 the followers of every discovered depth-1 follower.
/// Per-account not_found/protected/suspended and exhausted-retry failures
/// are recorded, never fatal; only FatalProviderError aborts (leaving the
/// thrown-from task at the frontier head).
ExpansionResult expand_seeds(GraphProvider& provider, const SeedSet& seeds,
                             const ExpansionPolicy& policy, const CrawlOptions& options = {});

/// Continues a saved crawl. Completing in one run and completing via any
/// interrupt/resume sequence yield identical account and edge sets.
ExpansionResult resume_crawl(GraphProvider& provider, CrawlState saved,
                             const CrawlOptions& options = {});

NetworkSnapshot snapshot_from_expansion(const ExpansionResult& result,
                                        std::chrono::system_clock::time_point created_at =
                                            std::chrono::system_clock::now());

}  // namespace boostnet
