#include "citerank/csv.hpp"

#include "citerank/errors.hpp"

namespace citerank::csv {

bool Reader::next(Row& row)
{
    std::string text;
    while (std::getline(in_, text)) {
        ++line_;
        if (!text.empty() && text.back() == '\r') {
            text.pop_back();
        }
        if (line_ == 1 && text.starts_with("\xEF\xBB\xBF")) {
            text.erase(0, 3);
        }
        if (text.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        row.line = line_;
        row.fields = split_line(text, line_);
        return true;
    }
    return false;
}

std::vector<std::string> split_line(std::string_view text, std::size_t line)
{
    std::vector<std::string> fields;
    std::string field;
    std::size_t i = 0;
    while (true) {
        field.clear();
        if (i < text.size() && text[i] == '"') {
            ++i;
            while (true) {
                if (i >= text.size()) {
                    throw DataError("unterminated quoted field", line);
                }
                if (text[i] == '"') {
                    if (i + 1 < text.size() && text[i + 1] == '"') {
                        field += '"';
                        i += 2;
                        continue;
                    }
                    ++i;
                    break;
                }
                field += text[i++];
            }
            if (i < text.size() && text[i] != ',') {
                throw DataError("unexpected character after closing quote", line);
            }
        } else {
            while (i < text.size() && text[i] != ',') {
                if (text[i] == '"') {
                    throw DataError("quote inside unquoted field", line);
                }
                field += text[i++];
            }
        }
        fields.push_back(field);
        if (i >= text.size()) {
            break;
        }
        ++i;  // comma
    }
    return fields;
}

std::string escape(std::string_view field)
{
    const bool needs_quotes = field.find_first_of(",\"") != std::string_view::npos
                              || (!field.empty() && (field.front() == ' ' || field.back() == ' '));
    if (!needs_quotes) {
        return std::string(field);
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string join(const std::vector<std::string>& fields)
{
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += escape(fields[i]);
    }
    return out;
}

}  // namespace citerank::csv
