#include "boostnet/account.hpp"

#include <cctype>
#include <cmath>

namespace boostnet {

namespace {

bool in_unit_interval(double x) {
    return std::isfinite(x) && x >= 0.0 && x <= 1.0;
}

}  // namespace

AccountId::AccountId(std::string v) : value(std::move(v)) {
    if (value.empty()) {
        throw InvariantError("account id must be non-empty");
    }
    for (unsigned char c : value) {
        if (std::isspace(c)) {
            throw InvariantError("account id must not contain whitespace: '" + value + "'");
        }
    }
}

ScoreTriple::ScoreTriple(double temporal_score, double network_score, double friend_score)
    : temporal(temporal_score), network(network_score), friend_(friend_score) {
    if (!in_unit_interval(temporal) || !in_unit_interval(network) || !in_unit_interval(friend_)) {
        throw RangeError("score components must be finite and within [0,1]");
    }
}

std::optional<ScoreTriple> ScoreTriple::checked(double t, double n, double f) {
    if (!in_unit_interval(t) || !in_unit_interval(n) || !in_unit_interval(f)) {
        return std::nullopt;
    }
    ScoreTriple s;
    s.temporal = t;
    s.network = n;
    s.friend_ = f;
    return s;
}

std::string_view to_string(Label label) {
    switch (label) {
        case Label::Unknown: return "unknown";
        case Label::Human: return "human";
        case Label::Socialbot: return "socialbot";
    }
    return "unknown";
}

std::string_view to_string(FetchStatus status) {
    switch (status) {
        case FetchStatus::Ok: return "ok";
        case FetchStatus::Protected: return "protected";
        case FetchStatus::Suspended: return "suspended";
        case FetchStatus::NotFound: return "not_found";
        case FetchStatus::Error: return "error";
    }
    return "error";
}

Label label_from_string(std::string_view s) {
    if (s == "unknown") return Label::Unknown;
    if (s == "human") return Label::Human;
    if (s == "socialbot") return Label::Socialbot;
    throw ParseError("unknown label '" + std::string(s) + "'");
}

FetchStatus fetch_status_from_string(std::string_view s) {
    if (s == "ok") return FetchStatus::Ok;
    if (s == "protected") return FetchStatus::Protected;
    if (s == "suspended") return FetchStatus::Suspended;
    if (s == "not_found") return FetchStatus::NotFound;
    if (s == "error") return FetchStatus::Error;
    throw ParseError("unknown fetch status '" + std::string(s) + "'");
}

void validate(const AccountRecord& record) {
    if (record.label != Label::Unknown && !record.scores.has_value()) {
        throw InvariantError("account " + record.id.value +
                             " is labeled but carries no scores");
    }
}

DirectedEdge::DirectedEdge(AccountId follower_id, AccountId followee_id)
    : follower(std::move(follower_id)), followee(std::move(followee_id)) {
    if (follower == followee) {
        throw InvariantError("self-follow rejected for account " + follower.value);
    }
}

}  // namespace boostnet
