#include "boostnet/fixture_provider.hpp"

#include <fstream>
#include <sstream>

namespace boostnet {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string token;
    while (in >> token) {
        tokens.push_back(token);
    }
    return tokens;
}

double canonical_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

FixtureGraphProvider::FixtureGraphProvider(std::size_t page_size, FaultPlan faults)
    : page_size_(page_size), faults_(faults), fault_rng_(faults.seed) {
    if (page_size_ == 0) {
        throw InvariantError("fixture provider: page size must be positive");
    }
}

std::unique_ptr<FixtureGraphProvider> FixtureGraphProvider::open(
    const std::filesystem::path& path, std::size_t page_size, FaultPlan faults) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open fixture file " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return from_text(buffer.str(), page_size, faults);
}

std::unique_ptr<FixtureGraphProvider> FixtureGraphProvider::from_text(std::string_view text,
                                                                      std::size_t page_size,
                                                                      FaultPlan faults) {
    auto provider =
        std::unique_ptr<FixtureGraphProvider>(new FixtureGraphProvider(page_size, faults));

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = tokenize(line);
        if (tokens.empty() || tokens.front().starts_with('#')) {
            continue;
        }
        const std::string& directive = tokens.front();

        if (directive == "followers" || directive == "followees") {
            if (tokens.size() < 2) {
                throw ParseError("missing subject id after '" + directive + "'", line_no);
            }
            AccountId subject{tokens[1]};
            provider->known_.insert(subject);
            auto& lists = directive == "followers" ? provider->followers_ : provider->followees_;
            auto& list = lists[subject];
            std::set<AccountId> seen(list.begin(), list.end());
            for (std::size_t i = 2; i < tokens.size(); ++i) {
                AccountId neighbor{tokens[i]};
                if (neighbor == subject) {
                    throw ParseError("self-follow for account " + subject.value, line_no);
                }
                provider->known_.insert(neighbor);
                if (seen.insert(neighbor).second) {
                    list.push_back(neighbor);
                }
            }
        } else if (directive == "status") {
            if (tokens.size() != 3) {
                throw ParseError("expected 'status <id> <state>'", line_no);
            }
            AccountId subject{tokens[1]};
            const std::string& state = tokens[2];
            FetchStatus status;
            if (state == "protected") {
                status = FetchStatus::Protected;
            } else if (state == "suspended") {
                status = FetchStatus::Suspended;
            } else if (state == "not_found") {
                status = FetchStatus::NotFound;
            } else {
                throw ParseError("unknown account state '" + state + "'", line_no);
            }
            provider->known_.insert(subject);
            provider->declared_status_[subject] = status;
        } else {
            throw ParseError("unknown directive '" + directive + "'", line_no);
        }
    }
    return provider;
}

void FixtureGraphProvider::maybe_inject_fault(const AccountId& id, Relation relation,
                                              const std::optional<std::string>& cursor) {
    ++calls_seen_;
    if (faults_.fatal_after_calls >= 0 && calls_seen_ > faults_.fatal_after_calls) {
        throw FatalProviderError("injected fatal provider failure");
    }
    if (faults_.transient_rate <= 0.0 && faults_.rate_limited_rate <= 0.0) {
        return;
    }
    const double draw = canonical_unit(fault_rng_);
    if (draw < faults_.transient_rate) {
        log_.push_back({id, relation, cursor, false, "transient"});
        throw TransientError("injected transient failure");
    }
    if (draw < faults_.transient_rate + faults_.rate_limited_rate) {
        log_.push_back({id, relation, cursor, false, "rate_limited"});
        throw RateLimitedError("injected rate limit", faults_.retry_after_seconds);
    }
}

ProviderPage FixtureGraphProvider::serve(const AccountId& id, Relation relation,
                                         const std::optional<std::string>& cursor) {
    std::lock_guard<std::mutex> lock(mutex_);
    maybe_inject_fault(id, relation, cursor);

    auto declared = declared_status_.find(id);
    if (declared != declared_status_.end()) {
        const char* outcome = nullptr;
        switch (declared->second) {
            case FetchStatus::Protected: outcome = "protected"; break;
            case FetchStatus::Suspended: outcome = "suspended"; break;
            default: outcome = "not_found"; break;
        }
        log_.push_back({id, relation, cursor, false, outcome});
        if (declared->second == FetchStatus::Protected) {
            throw ProtectedError("account " + id.value + " is protected");
        }
        if (declared->second == FetchStatus::Suspended) {
            throw SuspendedError("account " + id.value + " is suspended");
        }
        throw NotFoundError("account " + id.value + " not found");
    }
    if (!known_.contains(id)) {
        log_.push_back({id, relation, cursor, false, "not_found"});
        throw NotFoundError("account " + id.value + " not found");
    }

    const auto& lists = relation == Relation::Followers ? followers_ : followees_;
    static const std::vector<AccountId> kEmpty;
    auto it = lists.find(id);
    const std::vector<AccountId>& list = it != lists.end() ? it->second : kEmpty;

    std::size_t offset = 0;
    if (cursor.has_value()) {
        try {
            offset = std::stoull(*cursor);
        } catch (const std::exception&) {
            throw FatalProviderError("malformed cursor token '" + *cursor + "'");
        }
        if (offset > list.size()) {
            throw FatalProviderError("cursor past end of listing");
        }
    }

    ProviderPage page;
    const std::size_t end = std::min(list.size(), offset + page_size_);
    page.ids.assign(list.begin() + static_cast<std::ptrdiff_t>(offset),
                    list.begin() + static_cast<std::ptrdiff_t>(end));
    if (end < list.size()) {
        page.next_cursor = std::to_string(end);
    }
    log_.push_back({id, relation, cursor, !page.next_cursor.has_value(), "ok"});
    return page;
}

ProviderPage FixtureGraphProvider::fetch_followers(const AccountId& id,
                                                   const std::optional<std::string>& cursor) {
    return serve(id, Relation::Followers, cursor);
}

ProviderPage FixtureGraphProvider::fetch_followees(const AccountId& id,
                                                   const std::optional<std::string>& cursor) {
    return serve(id, Relation::Followees, cursor);
}

}  // namespace boostnet
