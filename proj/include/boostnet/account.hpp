#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "boostnet/errors.hpp"

namespace boostnet {

/// Opaque account identifier (a numeric platform user id rendered as text).
/// Non-empty, free of whitespace, compared by exact string equality.
struct AccountId {
    std::string value;

    AccountId() = default;
    explicit AccountId(std::string v);

    auto operator<=>(const AccountId&) const = default;
};

/// The three automation-classifier scores, each normalized to [0,1].
struct ScoreTriple {
    double temporal = 0.0;
    double network = 0.0;
    double friend_ = 0.0;

    ScoreTriple() = default;
    ScoreTriple(double temporal, double network, double friend_score);

    // Validating constructor variant; nullopt when any component is
    // non-finite or outside [0,1].
    static std::optional<ScoreTriple> checked(double t, double n, double f);

    bool operator==(const ScoreTriple&) const = default;
};

enum class Label { Unknown, Human, Socialbot };
enum class FetchStatus { Ok, Protected, Suspended, NotFound, Error };

std::string_view to_string(Label label);
std::string_view to_string(FetchStatus status);
Label label_from_string(std::string_view s);
FetchStatus fetch_status_from_string(std::string_view s);

/// One account as carried through the pipeline.
struct AccountRecord {
    AccountId id;
    bool is_seed = false;
    std::optional<ScoreTriple> scores;
    Label label = Label::Unknown;
    FetchStatus fetch_status = FetchStatus::Ok;
};

// Throws InvariantError when label is human/socialbot without scores.
void validate(const AccountRecord& record);

/// follower → followee follow relation. Self-follows are rejected.
struct DirectedEdge {
    AccountId follower;
    AccountId followee;

    DirectedEdge() = default;
    DirectedEdge(AccountId follower, AccountId followee);

    auto operator<=>(const DirectedEdge&) const = default;
};

}  // namespace boostnet

template <>
struct std::hash<boostnet::AccountId> {
    std::size_t operator()(const boostnet::AccountId& id) const noexcept {
        return std::hash<std::string>{}(id.value);
    }
};
