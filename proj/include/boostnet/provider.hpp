#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "boostnet/account.hpp"
#include "boostnet/errors.hpp"

namespace boostnet {

enum class Relation { Followers, Followees };

std::string_view to_string(Relation relation);
Relation relation_from_string(std::string_view s);

/// One page of a cursor-paginated id listing. An empty id list is only
/// legal on the final page (no next cursor).
struct ProviderPage {
    std::vector<AccountId> ids;
    std::optional<std::string> next_cursor;  // nullopt = end of listing
};

/// Request/response social-graph source. Iterating cursors from nullopt
/// (start) to the end marker yields each related id exactly once.
/// Implementations throw the ProviderError family on failure.
class GraphProvider {
public:
    virtual ~GraphProvider() = default;
    virtual ProviderPage fetch_followers(const AccountId& id,
                                         const std::optional<std::string>& cursor) = 0;
    virtual ProviderPage fetch_followees(const AccountId& id,
                                         const std::optional<std::string>& cursor) = 0;

    ProviderPage fetch(const AccountId& id, Relation relation,
                       const std::optional<std::string>& cursor) {
        return relation == Relation::Followers ? fetch_followers(id, cursor)
                                               : fetch_followees(id, cursor);
    }
};

using SleepFn = std::function<void(double seconds)>;

SleepFn real_sleep();
SleepFn no_sleep();

struct RetryPolicy {
    int max_transient_retries = 5;
    double base_delay_seconds = 1.0;
    // rate-limit waits do not count against transient retries, but an
    // endless 429 loop is treated as fatal eventually
    int max_rate_limit_waits = 100;
};

/// Runs a fetch with the standard retry discipline: rate limits wait the
/// signalled interval, transient failures back off exponentially with
/// full jitter, and not-found/protected/suspended/fatal pass through.
/// Exhausted transient retries rethrow TransientError.
template <typename Fetch>
auto fetch_with_retry(Fetch&& fetch, const RetryPolicy& policy, const SleepFn& sleep,
                      std::mt19937_64& jitter_rng) -> decltype(fetch()) {
    int transient_failures = 0;
    int rate_limit_waits = 0;
    for (;;) {
        try {
            return fetch();
        } catch (const RateLimitedError& e) {
            if (++rate_limit_waits > policy.max_rate_limit_waits) {
                throw FatalProviderError("rate limited beyond the configured wait budget");
            }
            sleep(e.retry_after_seconds);
        } catch (const TransientError&) {
            if (transient_failures >= policy.max_transient_retries) {
                throw;
            }
            const double cap =
                policy.base_delay_seconds * static_cast<double>(1 << transient_failures);
            const double unit = static_cast<double>(jitter_rng() >> 11) * 0x1.0p-53;
            sleep(cap * unit);  // full jitter in [0, cap)
            ++transient_failures;
        }
    }
}

}  // namespace boostnet
