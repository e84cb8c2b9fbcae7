#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <vector>

#include "boostnet/provider.hpp"

namespace boostnet {

/// Deterministic fault injection for fixture-backed providers. Rates are
/// per call; draws come from a dedicated seeded stream.
struct FaultPlan {
    std::uint64_t seed = 0;
    double transient_rate = 0.0;
    double rate_limited_rate = 0.0;
    double retry_after_seconds = 0.01;
    // test hook: raise FatalProviderError once this many calls completed
    long fatal_after_calls = -1;
};

struct ProviderCall {
    AccountId id;
    Relation relation = Relation::Followers;
    std::optional<std::string> cursor;
    bool completed = false;  // this call returned the listing's final page
    std::string outcome;     // ok / transient / rate_limited / not_found / protected / suspended
};

/// Offline provider serving a declared adjacency from a line-oriented
/// fixture file:
///
///   # comment
///   followers <id> <id1> <id2> ...
///   followees <id> <id1> ...
///   status <id> <protected|suspended|not_found>
///
/// Accounts mentioned anywhere are known; fetching an unknown id raises
/// NotFoundError. Pages carry at most page_size ids; cursors are opaque
/// offsets.
class FixtureGraphProvider final : public GraphProvider {
public:
    static std::unique_ptr<FixtureGraphProvider> open(const std::filesystem::path& path,
                                                      std::size_t page_size = 100,
                                                      FaultPlan faults = {});
    static std::unique_ptr<FixtureGraphProvider> from_text(std::string_view text,
                                                           std::size_t page_size = 100,
                                                           FaultPlan faults = {});

    ProviderPage fetch_followers(const AccountId& id,
                                 const std::optional<std::string>& cursor) override;
    ProviderPage fetch_followees(const AccountId& id,
                                 const std::optional<std::string>& cursor) override;

    const std::vector<ProviderCall>& call_log() const { return log_; }
    std::size_t call_count() const { return log_.size(); }
    std::size_t known_account_count() const { return known_.size(); }

private:
    FixtureGraphProvider(std::size_t page_size, FaultPlan faults);
    ProviderPage serve(const AccountId& id, Relation relation,
                       const std::optional<std::string>& cursor);
    void maybe_inject_fault(const AccountId& id, Relation relation,
                            const std::optional<std::string>& cursor);

    std::map<AccountId, std::vector<AccountId>> followers_;
    std::map<AccountId, std::vector<AccountId>> followees_;
    std::set<AccountId> known_;
    std::map<AccountId, FetchStatus> declared_status_;
    std::size_t page_size_;
    FaultPlan faults_;
    std::mt19937_64 fault_rng_;
    long calls_seen_ = 0;
    std::vector<ProviderCall> log_;
    std::mutex mutex_;
};

}  // namespace boostnet
