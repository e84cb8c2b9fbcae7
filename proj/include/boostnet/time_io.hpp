#pragma once

#include <chrono>
#include <string>

namespace boostnet {

/// "YYYY-MM-DDTHH:MM:SSZ", truncated to whole seconds.
std::string format_utc(std::chrono::system_clock::time_point tp);

/// Inverse of format_utc; throws ParseError on malformed input.
std::chrono::system_clock::time_point parse_utc(const std::string& text);

}  // namespace boostnet
