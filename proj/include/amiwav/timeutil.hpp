#pragma once

#include <cstdint>
#include <string>

namespace amiwav::timeutil {

// Timestamps are local-naive hours since 1970-01-01T00:00. No timezone or
// DST handling; an hour index is just calendar arithmetic.

// Parses "YYYY-MM-DDTHH:00" (minutes must be 00). Throws DataError on
// malformed input or out-of-range fields.
std::int64_t parse_hour_timestamp(const std::string& text);

// Inverse of parse_hour_timestamp.
std::string format_hour_timestamp(std::int64_t hour);

// Day of week for an hour index, 0 = Monday .. 6 = Sunday.
int weekday_of_hour(std::int64_t hour);

// Hour of day, 0..23.
int hour_of_day(std::int64_t hour);

// Hours since the most recent Monday 00:00, 0..167.
int week_phase_of_hour(std::int64_t hour);

} // namespace amiwav::timeutil
