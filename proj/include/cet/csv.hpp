#pragma once

#include <cstdio>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace cet {

// Minimal CSV handling for the pipeline's flat schemas: comma-separated,
// no quoting or embedded commas, UTF-8, LF or CRLF. Header row required.
class CsvReader {
public:
    explicit CsvReader(std::istream& in) : in_(in) {}

    // Reads the next line split into fields. Returns false at EOF.
    // Skips lines that are entirely empty. row_number() is 1-based and
    // counts physical lines (header is row 1).
    bool next_row(std::vector<std::string>& fields);

    size_t row_number() const { return row_; }

private:
    std::istream& in_;
    std::string line_;
    size_t row_ = 0;
};

void split_csv_line(std::string_view line, std::vector<std::string>& fields);

// Locates required columns in a header row; returns indices in the order of
// `names`. Throws Error("MissingColumn") listing the first missing name.
std::vector<size_t> require_columns(const std::vector<std::string>& header,
                                    const std::vector<std::string>& names);

// Shortest-round-trip-ish formatting used everywhere a double lands in a
// file, so identical values always serialize identically.
std::string format_double(double v);

bool parse_double(std::string_view text, double& out);
bool parse_int64(std::string_view text, long long& out);

}  // namespace cet
