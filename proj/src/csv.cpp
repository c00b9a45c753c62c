#include "cet/csv.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <cstring>

#include "cet/error.hpp"

namespace cet {

bool CsvReader::next_row(std::vector<std::string>& fields) {
    while (std::getline(in_, line_)) {
        ++row_;
        if (!line_.empty() && line_.back() == '\r') line_.pop_back();
        if (line_.empty()) continue;
        split_csv_line(line_, fields);
        return true;
    }
    return false;
}

void split_csv_line(std::string_view line, std::vector<std::string>& fields) {
    fields.clear();
    size_t start = 0;
    for (size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            fields.emplace_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
}

std::vector<size_t> require_columns(const std::vector<std::string>& header,
                                    const std::vector<std::string>& names) {
    std::vector<size_t> idx(names.size());
    for (size_t n = 0; n < names.size(); ++n) {
        bool found = false;
        for (size_t h = 0; h < header.size(); ++h) {
            if (header[h] == names[n]) {
                idx[n] = h;
                found = true;
                break;
            }
        }
        if (!found) throw data_error("MissingColumn", "required column '" + names[n] + "' not in header");
    }
    return idx;
}

std::string format_double(double v) {
    char buf[40];
    // %.17g round-trips any double; trim to %.15g first when it round-trips
    // so common values stay short.
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    if (std::strtod(buf, nullptr) != v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
    }
    return buf;
}

bool parse_double(std::string_view text, double& out) {
    if (text.empty()) return false;
    std::string tmp(text);
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(tmp.c_str(), &end);
    if (end != tmp.c_str() + tmp.size() || errno == ERANGE) return false;
    out = v;
    return true;
}

bool parse_int64(std::string_view text, long long& out) {
    if (text.empty()) return false;
    std::string tmp(text);
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(tmp.c_str(), &end, 10);
    if (end != tmp.c_str() + tmp.size() || errno == ERANGE) return false;
    out = v;
    return true;
}

}  // namespace cet
