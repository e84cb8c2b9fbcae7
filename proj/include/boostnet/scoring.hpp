#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "boostnet/account.hpp"
#include "boostnet/fixture_provider.hpp"
#include "boostnet/provider.hpp"
#include "boostnet/snapshot.hpp"

namespace boostnet {

/// Unvalidated provider payload. Kept raw so out-of-range values can be
/// rejected as protocol errors instead of silently clamped.
struct RawScoreTriple {
    double temporal = 0.0;
    double network = 0.0;
    double friend_ = 0.0;
};

/// Automation-score source; one triple per account. Throws the
/// ProviderError family on failure.
class ScoreProvider {
public:
    virtual ~ScoreProvider() = default;
    virtual RawScoreTriple fetch_score(const AccountId& id) = 0;
};

/// Offline score source from a line-oriented fixture:
///   <id> <temporal> <network> <friend>
/// '#' comments; decimals use '.'; every score must lie in [0,1].
class FixtureScoreProvider final : public ScoreProvider {
public:
    static std::unique_ptr<FixtureScoreProvider> open(const std::filesystem::path& path,
                                                      FaultPlan faults = {});
    static std::unique_ptr<FixtureScoreProvider> from_text(std::string_view text,
                                                           FaultPlan faults = {});

    RawScoreTriple fetch_score(const AccountId& id) override;
    std::size_t call_count() const { return calls_; }
    std::size_t row_count() const { return scores_.size(); }

private:
    explicit FixtureScoreProvider(FaultPlan faults);

    std::map<AccountId, ScoreTriple> scores_;
    FaultPlan faults_;
    std::mt19937_64 fault_rng_;
    long calls_seen_ = 0;
    std::size_t calls_ = 0;
    std::mutex mutex_;
};

struct ScoreCacheEntry {
    AccountId id;
    ScoreTriple scores;
    std::chrono::system_clock::time_point fetched_at;
};

/// In-memory score cache keyed by id, with JSONL persistence.
class ScoreCache {
public:
    const ScoreCacheEntry* lookup(const AccountId& id) const;
    void insert(ScoreCacheEntry entry);
    std::size_t size() const { return entries_.size(); }

    void save_jsonl(const std::filesystem::path& path) const;
    static ScoreCache load_jsonl(const std::filesystem::path& path);

private:
    std::map<AccountId, ScoreCacheEntry> entries_;
};

struct ScoreOutcome {
    std::optional<ScoreTriple> scores;
    FetchStatus status = FetchStatus::Ok;
};

struct ScoringOptions {
    RetryPolicy retry;
    SleepFn sleep = real_sleep();
    std::uint64_t rng_seed = 0;
};

/// Resolves a triple for every id: cache hits are served without provider
/// calls; misses are fetched with the crawl retry discipline and cached.
/// Out-of-range provider data and exhausted retries become status error;
/// not_found/protected/suspended are recorded per account. Requires a
/// duplicate-free id list.
std::map<AccountId, ScoreOutcome> score_accounts(ScoreProvider& provider,
                                                 const std::vector<AccountId>& ids,
                                                 ScoreCache& cache,
                                                 const ScoringOptions& options = {});

/// Applies score outcomes onto a snapshot copy: triples attach to the
/// matching records, failures overwrite fetch_status.
NetworkSnapshot apply_scores(const NetworkSnapshot& snapshot,
                             const std::map<AccountId, ScoreOutcome>& outcomes);

}  // namespace boostnet
