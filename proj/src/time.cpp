#include "cet/time.hpp"

#include <cstdio>

#include "cet/error.hpp"

namespace cet {

bool is_leap_year(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
    static const int lengths[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2 && is_leap_year(year)) return 29;
    return lengths[month - 1];
}

int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2u) / 5u + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<int64_t>(doe) - 719468;
}

void civil_from_days(int64_t z, int& year, int& month, int& day) {
    z += 719468;
    const int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int64_t y = static_cast<int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    day = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    month = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    year = static_cast<int>(y + (month <= 2));
}

Timestamp make_timestamp(int year, int month, int day, int hour, int minute, int second) {
    return days_from_civil(year, month, day) * kSecondsPerDay + hour * 3600LL + minute * 60LL + second;
}

namespace {

bool parse_fixed_int(std::string_view s, size_t pos, size_t len, int& out) {
    if (pos + len > s.size()) return false;
    int v = 0;
    for (size_t i = pos; i < pos + len; ++i) {
        char c = s[i];
        if (c < '0' || c > '9') return false;
        v = v * 10 + (c - '0');
    }
    out = v;
    return true;
}

}  // namespace

bool try_parse_timestamp(std::string_view text, Timestamp& out) {
    // "YYYY-MM-DD HH:MM" or "YYYY-MM-DD HH:MM:SS"
    if (text.size() != 16 && text.size() != 19) return false;
    int year, month, day, hour, minute, second = 0;
    if (!parse_fixed_int(text, 0, 4, year) || text[4] != '-' ||
        !parse_fixed_int(text, 5, 2, month) || text[7] != '-' ||
        !parse_fixed_int(text, 8, 2, day) || text[10] != ' ' ||
        !parse_fixed_int(text, 11, 2, hour) || text[13] != ':' ||
        !parse_fixed_int(text, 14, 2, minute)) {
        return false;
    }
    if (text.size() == 19) {
        if (text[16] != ':' || !parse_fixed_int(text, 17, 2, second)) return false;
    }
    if (month < 1 || month > 12 || day < 1 || day > days_in_month(year, month)) return false;
    if (hour > 23 || minute > 59 || second > 59) return false;
    out = make_timestamp(year, month, day, hour, minute, second);
    return true;
}

Timestamp parse_timestamp(std::string_view text) {
    Timestamp t;
    if (!try_parse_timestamp(text, t)) {
        throw data_error("BadTimestamp", "cannot parse timestamp '" + std::string(text) + "'");
    }
    return t;
}

std::string format_timestamp(Timestamp t) {
    int64_t days = t >= 0 ? t / kSecondsPerDay : (t - (kSecondsPerDay - 1)) / kSecondsPerDay;
    int64_t rem = t - days * kSecondsPerDay;
    int year, month, day;
    civil_from_days(days, year, month, day);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d %02lld:%02lld:%02lld", year, month, day,
                  static_cast<long long>(rem / 3600), static_cast<long long>((rem / 60) % 60),
                  static_cast<long long>(rem % 60));
    return buf;
}

}  // namespace cet
