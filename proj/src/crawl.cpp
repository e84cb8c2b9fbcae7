#include "boostnet/crawl.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>

#include "json.hpp"

namespace boostnet {

using ordered_json = nlohmann::ordered_json;

SeedSet SeedSet::from_ids(std::vector<AccountId> ids) {
    SeedSet seeds;
    std::set<AccountId> seen;
    for (AccountId& id : ids) {
        if (seen.insert(id).second) {
            seeds.ids.push_back(std::move(id));
        }
    }
    if (seeds.ids.empty()) {
        throw InvariantError("seed set must be non-empty");
    }
    return seeds;
}

SeedSet SeedSet::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open seeds file " + path.string());
    }
    std::vector<AccountId> ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string token;
        if (!(fields >> token) || token.starts_with('#')) {
            continue;
        }
        std::string extra;
        if (fields >> extra) {
            throw ParseError("expected a single id", line_no);
        }
        ids.emplace_back(token);
    }
    if (ids.empty()) {
        throw ParseError("seeds file " + path.string() + " contains no ids");
    }
    return from_ids(std::move(ids));
}

void ExpansionPolicy::validate() const {
    if (follower_depth != 1 && follower_depth != 2) {
        throw InvariantError("follower depth must be 1 or 2");
    }
    if (per_account_page_limit.has_value() && *per_account_page_limit < 1) {
        throw InvariantError("per-account page limit must be positive");
    }
}

void CrawlState::validate() const {
    policy.validate();
    if (seeds.empty()) {
        throw CorruptStateError("crawl state has no seeds");
    }
    std::set<std::pair<AccountId, Relation>> in_frontier;
    for (const PendingFetch& task : frontier) {
        if (task.hop != 1 && task.hop != 2) {
            throw CorruptStateError("frontier hop out of range for " + task.id.value);
        }
        if (task.pages_done < 0) {
            throw CorruptStateError("negative page count for " + task.id.value);
        }
        if (!in_frontier.emplace(task.id, task.relation).second) {
            throw CorruptStateError("duplicate frontier entry for " + task.id.value);
        }
        if (visited.contains({task.id, task.relation})) {
            throw CorruptStateError("account " + task.id.value +
                                    " is both pending and visited");
        }
    }
    for (const DirectedEdge& edge : edges) {
        if (!accounts.contains(edge.follower) || !accounts.contains(edge.followee)) {
            throw CorruptStateError("edge references unknown account " + edge.follower.value +
                                    " -> " + edge.followee.value);
        }
    }
    for (const AccountId& seed : seeds) {
        if (!accounts.contains(seed)) {
            throw CorruptStateError("seed " + seed.value + " missing from accounts");
        }
    }
}

namespace {

struct FetchOutcome {
    std::optional<ProviderPage> page;      // set on success
    FetchStatus failure = FetchStatus::Ok; // set when page is absent
};

FetchOutcome run_one_fetch(GraphProvider& provider, const PendingFetch& task,
                           const CrawlOptions& options, std::uint64_t task_index) {
    std::mt19937_64 jitter(options.rng_seed ^ (0x9e3779b97f4a7c15ull * (task_index + 1)));
    try {
        ProviderPage page = fetch_with_retry(
            [&] { return provider.fetch(task.id, task.relation, task.cursor); }, options.retry,
            options.sleep, jitter);
        if (page.ids.empty() && page.next_cursor.has_value()) {
            throw FatalProviderError("provider returned an empty page with a next cursor");
        }
        return {std::move(page), FetchStatus::Ok};
    } catch (const NotFoundError&) {
        return {std::nullopt, FetchStatus::NotFound};
    } catch (const ProtectedError&) {
        return {std::nullopt, FetchStatus::Protected};
    } catch (const SuspendedError&) {
        return {std::nullopt, FetchStatus::Suspended};
    } catch (const TransientError&) {
        return {std::nullopt, FetchStatus::Error};  // retries exhausted
    }
}

class CrawlEngine {
public:
    CrawlEngine(GraphProvider& provider, CrawlState state, const CrawlOptions& options)
        : provider_(provider), state_(std::move(state)), options_(options) {
        for (const auto& pair : state_.visited) {
            scheduled_.insert(pair);
        }
        for (const PendingFetch& task : state_.frontier) {
            scheduled_.emplace(task.id, task.relation);
        }
    }

    ExpansionResult run() {
        long requests_made = 0;
        std::uint64_t task_index = 0;
        while (!state_.frontier.empty()) {
            if (options_.max_requests >= 0 && requests_made >= options_.max_requests) {
                break;  // quiescent point; state stays resumable
            }
            std::size_t batch = state_.frontier.size();
            batch = std::min(batch, static_cast<std::size_t>(std::max(1, options_.max_in_flight)));
            if (options_.max_requests >= 0) {
                batch = std::min(batch,
                                 static_cast<std::size_t>(options_.max_requests - requests_made));
            }

            std::vector<PendingFetch> tasks;
            for (std::size_t i = 0; i < batch; ++i) {
                tasks.push_back(state_.frontier.front());
                state_.frontier.pop_front();
            }

            std::vector<FetchOutcome> outcomes(tasks.size());
            if (tasks.size() == 1) {
                outcomes[0] = fetch_or_restore(tasks[0], task_index);
            } else {
                std::vector<std::future<FetchOutcome>> futures;
                futures.reserve(tasks.size());
                for (std::size_t i = 0; i < tasks.size(); ++i) {
                    futures.push_back(std::async(std::launch::async, run_one_fetch,
                                                 std::ref(provider_), std::cref(tasks[i]),
                                                 std::cref(options_), task_index + i));
                }
                std::exception_ptr fatal;
                for (std::size_t i = 0; i < tasks.size(); ++i) {
                    try {
                        outcomes[i] = futures[i].get();
                    } catch (const FatalProviderError&) {
                        if (!fatal) {
                            fatal = std::current_exception();
                        }
                    }
                }
                if (fatal) {
                    // nothing from this batch was applied; requeue it whole
                    restore_batch(tasks);
                    std::rethrow_exception(fatal);
                }
            }
            task_index += tasks.size();
            requests_made += static_cast<long>(tasks.size());

            for (std::size_t i = 0; i < tasks.size(); ++i) {
                apply(tasks[i], outcomes[i]);
            }
        }
        return {state_.accounts, state_.edges, std::move(state_)};
    }

private:
    FetchOutcome fetch_or_restore(const PendingFetch& task, std::uint64_t task_index) {
        try {
            return run_one_fetch(provider_, task, options_, task_index);
        } catch (const FatalProviderError&) {
            state_.frontier.push_front(task);  // keep the state resumable
            throw;
        }
    }

    void restore_batch(const std::vector<PendingFetch>& tasks) {
        for (std::size_t i = tasks.size(); i-- > 0;) {
            state_.frontier.push_front(tasks[i]);
        }
    }

    void apply(const PendingFetch& task, const FetchOutcome& outcome) {
        if (!outcome.page.has_value()) {
            state_.accounts[task.id] = outcome.failure;
            state_.visited.emplace(task.id, task.relation);
            return;
        }

        state_.accounts.try_emplace(task.id, FetchStatus::Ok);
        for (const AccountId& other : outcome.page->ids) {
            if (other == task.id) {
                throw FatalProviderError("provider returned a self-follow for " + task.id.value);
            }
            state_.accounts.try_emplace(other, FetchStatus::Ok);
            if (task.relation == Relation::Followers) {
                state_.edges.insert(DirectedEdge(other, task.id));
                if (task.hop == 1 && state_.policy.follower_depth >= 2) {
                    schedule(other, Relation::Followers, 2);
                }
            } else {
                state_.edges.insert(DirectedEdge(task.id, other));
            }
        }

        const long pages_done = task.pages_done + 1;
        const bool page_budget_left = !state_.policy.per_account_page_limit.has_value() ||
                                      pages_done < *state_.policy.per_account_page_limit;
        if (outcome.page->next_cursor.has_value() && page_budget_left) {
            state_.frontier.push_back(
                {task.id, task.relation, outcome.page->next_cursor, task.hop, pages_done});
        } else {
            state_.visited.emplace(task.id, task.relation);
        }
    }

    void schedule(const AccountId& id, Relation relation, int hop) {
        if (scheduled_.emplace(id, relation).second) {
            state_.frontier.push_back({id, relation, std::nullopt, hop, 0});
        }
    }

    GraphProvider& provider_;
    CrawlState state_;
    CrawlOptions options_;
    std::set<std::pair<AccountId, Relation>> scheduled_;
};

}  // namespace

ExpansionResult expand_seeds(GraphProvider& provider, const SeedSet& seeds,
                             const ExpansionPolicy& policy, const CrawlOptions& options) {
    policy.validate();
    if (seeds.ids.empty()) {
        throw InvariantError("seed set must be non-empty");
    }

    CrawlState state;
    state.policy = policy;
    state.seeds = seeds.ids;
    for (const AccountId& seed : seeds.ids) {
        state.accounts.try_emplace(seed, FetchStatus::Ok);
        state.frontier.push_back({seed, Relation::Followers, std::nullopt, 1, 0});
        if (policy.collect_followees_of_seeds) {
            state.frontier.push_back({seed, Relation::Followees, std::nullopt, 1, 0});
        }
    }
    return CrawlEngine(provider, std::move(state), options).run();
}

ExpansionResult resume_crawl(GraphProvider& provider, CrawlState saved,
                             const CrawlOptions& options) {
    saved.validate();
    return CrawlEngine(provider, std::move(saved), options).run();
}

NetworkSnapshot snapshot_from_expansion(const ExpansionResult& result,
                                        std::chrono::system_clock::time_point created_at) {
    std::vector<AccountRecord> records;
    records.reserve(result.accounts.size());
    const std::set<AccountId> seed_set(result.state.seeds.begin(), result.state.seeds.end());
    for (const auto& [id, status] : result.accounts) {
        AccountRecord record;
        record.id = id;
        record.is_seed = seed_set.contains(id);
        record.fetch_status = status;
        records.push_back(std::move(record));
    }
    const std::vector<DirectedEdge> edges(result.edges.begin(), result.edges.end());
    return build_network(records, edges, result.state.seeds,
                         result.state.policy.follower_depth, created_at);
}

// --- persistence ---

namespace {

ordered_json policy_to_json(const ExpansionPolicy& policy) {
    ordered_json j;
    j["follower_depth"] = policy.follower_depth;
    j["collect_followees_of_seeds"] = policy.collect_followees_of_seeds;
    if (policy.per_account_page_limit.has_value()) {
        j["per_account_page_limit"] = *policy.per_account_page_limit;
    } else {
        j["per_account_page_limit"] = nullptr;
    }
    return j;
}

ExpansionPolicy policy_from_json(const ordered_json& j) {
    ExpansionPolicy policy;
    policy.follower_depth = j.at("follower_depth").get<int>();
    policy.collect_followees_of_seeds = j.at("collect_followees_of_seeds").get<bool>();
    if (!j.at("per_account_page_limit").is_null()) {
        policy.per_account_page_limit = j.at("per_account_page_limit").get<long>();
    }
    return policy;
}

}  // namespace

std::string CrawlState::to_json_string() const {
    ordered_json j;
    j["version"] = 1;
    j["policy"] = policy_to_json(policy);
    j["seeds"] = ordered_json::array();
    for (const AccountId& seed : seeds) {
        j["seeds"].push_back(seed.value);
    }
    j["frontier"] = ordered_json::array();
    for (const PendingFetch& task : frontier) {
        ordered_json t;
        t["id"] = task.id.value;
        t["relation"] = to_string(task.relation);
        t["cursor"] = task.cursor.has_value() ? ordered_json(*task.cursor) : ordered_json(nullptr);
        t["hop"] = task.hop;
        t["pages_done"] = task.pages_done;
        j["frontier"].push_back(std::move(t));
    }
    j["visited"] = ordered_json::array();
    for (const auto& [id, relation] : visited) {
        j["visited"].push_back({id.value, to_string(relation)});
    }
    j["accounts"] = ordered_json::array();
    for (const auto& [id, status] : accounts) {
        j["accounts"].push_back({id.value, to_string(status)});
    }
    j["edges"] = ordered_json::array();
    for (const DirectedEdge& edge : edges) {
        j["edges"].push_back({edge.follower.value, edge.followee.value});
    }
    return j.dump(2) + "\n";
}

CrawlState CrawlState::from_json_string(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw CorruptStateError(std::string("crawl state is not valid JSON: ") + e.what());
    }

    CrawlState state;
    try {
        if (j.at("version").get<int>() != 1) {
            throw CorruptStateError("unsupported crawl state version");
        }
        state.policy = policy_from_json(j.at("policy"));
        for (const auto& seed : j.at("seeds")) {
            state.seeds.emplace_back(seed.get<std::string>());
        }
        for (const auto& t : j.at("frontier")) {
            PendingFetch task;
            task.id = AccountId(t.at("id").get<std::string>());
            task.relation = relation_from_string(t.at("relation").get<std::string>());
            if (!t.at("cursor").is_null()) {
                task.cursor = t.at("cursor").get<std::string>();
            }
            task.hop = t.at("hop").get<int>();
            task.pages_done = t.at("pages_done").get<long>();
            state.frontier.push_back(std::move(task));
        }
        for (const auto& v : j.at("visited")) {
            state.visited.emplace(AccountId(v.at(0).get<std::string>()),
                                  relation_from_string(v.at(1).get<std::string>()));
        }
        for (const auto& a : j.at("accounts")) {
            state.accounts.emplace(AccountId(a.at(0).get<std::string>()),
                                   fetch_status_from_string(a.at(1).get<std::string>()));
        }
        for (const auto& e : j.at("edges")) {
            state.edges.insert(DirectedEdge(AccountId(e.at(0).get<std::string>()),
                                            AccountId(e.at(1).get<std::string>())));
        }
    } catch (const CorruptStateError&) {
        throw;
    } catch (const std::exception& e) {
        throw CorruptStateError(std::string("malformed crawl state: ") + e.what());
    }

    try {
        state.validate();
    } catch (const Error& e) {
        throw CorruptStateError(e.what());
    }
    return state;
}

void CrawlState::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write crawl state to " + path.string());
    }
    out << to_json_string();
}

CrawlState CrawlState::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read crawl state from " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return from_json_string(buffer.str());
}

}  // namespace boostnet
