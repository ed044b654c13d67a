#include "amiwav/timeutil.hpp"

#include "amiwav/errors.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>

namespace amiwav::timeutil {

namespace {

int parse_int_field(const std::string& text, std::size_t pos, std::size_t len) {
    int value = 0;
    const char* first = text.data() + pos;
    auto [ptr, ec] = std::from_chars(first, first + len, value);
    if (ec != std::errc{} || ptr != first + len) {
        throw DataError("malformed timestamp '" + text + "'");
    }
    return value;
}

} // namespace

std::int64_t parse_hour_timestamp(const std::string& text) {
    // Fixed layout: YYYY-MM-DDTHH:00
    if (text.size() != 16 || text[4] != '-' || text[7] != '-' || text[10] != 'T' ||
        text[13] != ':') {
        throw DataError("malformed timestamp '" + text + "' (expected YYYY-MM-DDTHH:00)");
    }
    const int year = parse_int_field(text, 0, 4);
    const int month = parse_int_field(text, 5, 2);
    const int day = parse_int_field(text, 8, 2);
    const int hour = parse_int_field(text, 11, 2);
    const int minute = parse_int_field(text, 14, 2);
    if (minute != 0) {
        throw DataError("timestamp '" + text + "' is not hour-aligned");
    }
    if (hour < 0 || hour > 23) {
        throw DataError("timestamp '" + text + "' has hour out of range");
    }
    const std::chrono::year_month_day ymd{std::chrono::year{year},
                                          std::chrono::month{static_cast<unsigned>(month)},
                                          std::chrono::day{static_cast<unsigned>(day)}};
    if (!ymd.ok()) {
        throw DataError("timestamp '" + text + "' is not a valid calendar date");
    }
    const auto days = std::chrono::sys_days{ymd}.time_since_epoch().count();
    return static_cast<std::int64_t>(days) * 24 + hour;
}

std::string format_hour_timestamp(std::int64_t hour) {
    std::int64_t days = hour / 24;
    int h = static_cast<int>(hour % 24);
    if (h < 0) {
        h += 24;
        --days;
    }
    const std::chrono::year_month_day ymd{
        std::chrono::sys_days{std::chrono::days{days}}};
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:00",
                  static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                  static_cast<unsigned>(ymd.day()), h);
    return buf;
}

int weekday_of_hour(std::int64_t hour) {
    std::int64_t days = hour / 24;
    if (hour % 24 < 0) --days;
    // 1970-01-01 is a Thursday.
    return static_cast<int>(((days + 3) % 7 + 7) % 7);
}

int hour_of_day(std::int64_t hour) {
    return static_cast<int>(((hour % 24) + 24) % 24);
}

int week_phase_of_hour(std::int64_t hour) {
    return weekday_of_hour(hour) * 24 + hour_of_day(hour);
}

} // namespace amiwav::timeutil
