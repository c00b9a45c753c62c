#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cet {

// Timestamps are seconds since 1970-01-01 00:00:00 on a proleptic Gregorian
// calendar, no timezone. Wire format is "YYYY-MM-DD HH:MM:SS" (seconds
// optional on input).
using Timestamp = int64_t;

constexpr int64_t kSecondsPerHour = 3600;
constexpr int64_t kSecondsPerDay = 86400;

bool is_leap_year(int year);
int days_in_month(int year, int month);

// Days since 1970-01-01 for a civil date.
int64_t days_from_civil(int year, int month, int day);
void civil_from_days(int64_t days, int& year, int& month, int& day);

Timestamp make_timestamp(int year, int month, int day, int hour = 0, int minute = 0, int second = 0);

// Throws Error("BadTimestamp") on malformed input or out-of-range fields.
Timestamp parse_timestamp(std::string_view text);
bool try_parse_timestamp(std::string_view text, Timestamp& out);

std::string format_timestamp(Timestamp t);

}  // namespace cet
