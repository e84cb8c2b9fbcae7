#include "boostnet/time_io.hpp"

#include <cstdio>
#include <ctime>

#include "boostnet/errors.hpp"

namespace boostnet {

std::string format_utc(std::chrono::system_clock::time_point tp) {
    const std::time_t seconds = std::chrono::system_clock::to_time_t(tp);
    std::tm utc{};
    gmtime_r(&seconds, &utc);
    char buf[80];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", utc.tm_year + 1900,
                  utc.tm_mon + 1, utc.tm_mday, utc.tm_hour, utc.tm_min, utc.tm_sec);
    return buf;
}

std::chrono::system_clock::time_point parse_utc(const std::string& text) {
    std::tm utc{};
    int year = 0, mon = 0, day = 0, hour = 0, min = 0, sec = 0;
    char z = 0;
    if (std::sscanf(text.c_str(), "%4d-%2d-%2dT%2d:%2d:%2d%c", &year, &mon, &day, &hour, &min,
                    &sec, &z) != 7 ||
        z != 'Z') {
        throw ParseError("malformed UTC timestamp '" + text + "'");
    }
    utc.tm_year = year - 1900;
    utc.tm_mon = mon - 1;
    utc.tm_mday = day;
    utc.tm_hour = hour;
    utc.tm_min = min;
    utc.tm_sec = sec;
    const std::time_t seconds = timegm(&utc);
    return std::chrono::system_clock::from_time_t(seconds);
}

}  // namespace boostnet
