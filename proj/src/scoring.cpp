#include "boostnet/scoring.hpp"

#include <fstream>
#include <sstream>

#include "boostnet/time_io.hpp"
#include "json.hpp"

namespace boostnet {

namespace {

double canonical_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double parse_score_token(const std::string& token, std::size_t line_no) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &consumed);
    } catch (const std::exception&) {
        throw ParseError("malformed score '" + token + "'", line_no);
    }
    if (consumed != token.size()) {
        throw ParseError("malformed score '" + token + "'", line_no);
    }
    return value;
}

}  // namespace

FixtureScoreProvider::FixtureScoreProvider(FaultPlan faults)
    : faults_(faults), fault_rng_(faults.seed) {}

std::unique_ptr<FixtureScoreProvider> FixtureScoreProvider::open(
    const std::filesystem::path& path, FaultPlan faults) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open score fixture " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return from_text(buffer.str(), faults);
}

std::unique_ptr<FixtureScoreProvider> FixtureScoreProvider::from_text(std::string_view text,
                                                                      FaultPlan faults) {
    auto provider = std::unique_ptr<FixtureScoreProvider>(new FixtureScoreProvider(faults));

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string id_token;
        if (!(fields >> id_token) || id_token.starts_with('#')) {
            continue;
        }
        std::string t, n, f, extra;
        if (!(fields >> t >> n >> f)) {
            throw ParseError("expected '<id> <temporal> <network> <friend>'", line_no);
        }
        if (fields >> extra) {
            throw ParseError("trailing data '" + extra + "'", line_no);
        }
        const double temporal = parse_score_token(t, line_no);
        const double network = parse_score_token(n, line_no);
        const double friend_score = parse_score_token(f, line_no);
        auto triple = ScoreTriple::checked(temporal, network, friend_score);
        if (!triple.has_value()) {
            throw RangeError("score out of [0,1] for account " + id_token);
        }
        provider->scores_[AccountId(id_token)] = *triple;
    }
    return provider;
}

RawScoreTriple FixtureScoreProvider::fetch_score(const AccountId& id) {
    std::lock_guard<std::mutex> lock(mutex_);
    ++calls_;
    ++calls_seen_;
    if (faults_.fatal_after_calls >= 0 && calls_seen_ > faults_.fatal_after_calls) {
        throw FatalProviderError("injected fatal provider failure");
    }
    if (faults_.transient_rate > 0.0 || faults_.rate_limited_rate > 0.0) {
        const double draw = canonical_unit(fault_rng_);
        if (draw < faults_.transient_rate) {
            throw TransientError("injected transient failure");
        }
        if (draw < faults_.transient_rate + faults_.rate_limited_rate) {
            throw RateLimitedError("injected rate limit", faults_.retry_after_seconds);
        }
    }
    auto it = scores_.find(id);
    if (it == scores_.end()) {
        throw NotFoundError("account " + id.value + " not found");
    }
    return {it->second.temporal, it->second.network, it->second.friend_};
}

const ScoreCacheEntry* ScoreCache::lookup(const AccountId& id) const {
    auto it = entries_.find(id);
    return it == entries_.end() ? nullptr : &it->second;
}

void ScoreCache::insert(ScoreCacheEntry entry) {
    entries_.insert_or_assign(entry.id, std::move(entry));
}

void ScoreCache::save_jsonl(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write score cache to " + path.string());
    }
    for (const auto& [id, entry] : entries_) {
        nlohmann::ordered_json j;
        j["id"] = id.value;
        j["scores"] = {{"temporal", entry.scores.temporal},
                       {"network", entry.scores.network},
                       {"friend", entry.scores.friend_}};
        j["fetched_at"] = format_utc(entry.fetched_at);
        out << j.dump() << "\n";
    }
}

ScoreCache ScoreCache::load_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open score cache " + path.string());
    }
    ScoreCache cache;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        try {
            const auto j = nlohmann::ordered_json::parse(line);
            ScoreCacheEntry entry;
            entry.id = AccountId(j.at("id").get<std::string>());
            const auto& s = j.at("scores");
            entry.scores = ScoreTriple(s.at("temporal").get<double>(),
                                       s.at("network").get<double>(),
                                       s.at("friend").get<double>());
            entry.fetched_at = parse_utc(j.at("fetched_at").get<std::string>());
            cache.insert(std::move(entry));
        } catch (const Error&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(std::string("malformed cache entry: ") + e.what(), line_no);
        }
    }
    return cache;
}

std::map<AccountId, ScoreOutcome> score_accounts(ScoreProvider& provider,
                                                 const std::vector<AccountId>& ids,
                                                 ScoreCache& cache,
                                                 const ScoringOptions& options) {
    {
        const std::set<AccountId> unique(ids.begin(), ids.end());
        if (unique.size() != ids.size()) {
            throw InvariantError("score_accounts: id list contains duplicates");
        }
    }

    std::map<AccountId, ScoreOutcome> outcomes;
    std::uint64_t task_index = 0;
    for (const AccountId& id : ids) {
        if (const ScoreCacheEntry* hit = cache.lookup(id)) {
            outcomes[id] = {hit->scores, FetchStatus::Ok};
            continue;
        }

        std::mt19937_64 jitter(options.rng_seed ^ (0x9e3779b97f4a7c15ull * (++task_index)));
        try {
            const RawScoreTriple raw = fetch_with_retry(
                [&] { return provider.fetch_score(id); }, options.retry, options.sleep, jitter);
            auto triple = ScoreTriple::checked(raw.temporal, raw.network, raw.friend_);
            if (!triple.has_value()) {
                // protocol violation: record, never clamp
                outcomes[id] = {std::nullopt, FetchStatus::Error};
                continue;
            }
            outcomes[id] = {*triple, FetchStatus::Ok};
            cache.insert({id, *triple, std::chrono::system_clock::now()});
        } catch (const NotFoundError&) {
            outcomes[id] = {std::nullopt, FetchStatus::NotFound};
        } catch (const ProtectedError&) {
            outcomes[id] = {std::nullopt, FetchStatus::Protected};
        } catch (const SuspendedError&) {
            outcomes[id] = {std::nullopt, FetchStatus::Suspended};
        } catch (const TransientError&) {
            outcomes[id] = {std::nullopt, FetchStatus::Error};
        }
    }
    return outcomes;
}

NetworkSnapshot apply_scores(const NetworkSnapshot& snapshot,
                             const std::map<AccountId, ScoreOutcome>& outcomes) {
    NetworkSnapshot scored = snapshot;
    for (auto& [id, record] : scored.accounts) {
        auto it = outcomes.find(id);
        if (it == outcomes.end()) {
            continue;
        }
        if (it->second.scores.has_value()) {
            record.scores = it->second.scores;
        } else {
            record.fetch_status = it->second.status;
        }
    }
    return scored;
}

}  // namespace boostnet
