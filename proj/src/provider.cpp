#include "boostnet/provider.hpp"

#include <chrono>
#include <thread>

namespace boostnet {

std::string_view to_string(Relation relation) {
    return relation == Relation::Followers ? "followers" : "followees";
}

Relation relation_from_string(std::string_view s) {
    if (s == "followers") return Relation::Followers;
    if (s == "followees") return Relation::Followees;
    throw ParseError("unknown relation '" + std::string(s) + "'");
}

SleepFn real_sleep() {
    return [](double seconds) {
        if (seconds > 0) {
            std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
        }
    };
}

SleepFn no_sleep() {
    return [](double) {};
}

}  // namespace boostnet
