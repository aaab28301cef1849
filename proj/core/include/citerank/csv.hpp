#pragma once

// Minimal line-oriented CSV: comma separated, RFC 4180 double quotes within a
// line, no embedded newlines. CRLF endings and a leading UTF-8 BOM are accepted.

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace citerank::csv {

struct Row {
    std::size_t line = 0;  // 1-based
    std::vector<std::string> fields;
};

class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    /// Next non-blank row; false at end of input. Throws DataError on a bad quote.
    bool next(Row& row);

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

/// Split one line into fields. Throws DataError (tagged with `line`) on a bad quote.
std::vector<std::string> split_line(std::string_view text, std::size_t line);

/// Quote a field if it contains a comma, quote or leading/trailing space.
std::string escape(std::string_view field);

std::string join(const std::vector<std::string>& fields);

}  // namespace citerank::csv
