#include "citerank/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <unordered_map>

#include "citerank/csv.hpp"
#include "citerank/errors.hpp"

namespace citerank {

namespace {

std::ifstream open_input(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    return in;
}

std::ofstream open_output(const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path)
{
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

std::vector<std::string> header_fields(std::string_view header)
{
    return csv::split_line(header, 0);
}

// Iterates the data rows of one file, enforcing the header contract.
class TableReader {
public:
    TableReader(const std::filesystem::path& path, std::string_view header)
        : path_(path), in_(open_input(path)), reader_(in_), header_(header_fields(header))
    {
        csv::Row row;
        if (!reader_.next(row)) {
            throw DataError(path_.string() + ": missing header '" + std::string(header) + "'", 1);
        }
        if (row.fields != header_) {
            throw DataError(path_.string() + ": expected header '" + std::string(header) + "'",
                            row.line);
        }
    }

    bool next(csv::Row& row)
    {
        if (!reader_.next(row)) {
            return false;
        }
        if (row.fields == header_) {
            throw DataError(path_.string() + ": duplicate header", row.line);
        }
        if (row.fields.size() != header_.size()) {
            throw DataError(path_.string() + ": expected " + std::to_string(header_.size())
                                + " fields, got " + std::to_string(row.fields.size()),
                            row.line);
        }
        for (std::size_t k = 0; k < row.fields.size(); ++k) {
            if (row.fields[k].empty() && header_[k] != "venue") {
                throw DataError(path_.string() + ": empty " + header_[k], row.line);
            }
        }
        return true;
    }

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
    std::ifstream in_;
    csv::Reader reader_;
    std::vector<std::string> header_;
};

template <typename T>
T parse_number(const std::string& text, const char* what, const TableReader& table,
               std::size_t line)
{
    T value{};
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw DataError(table.path().string() + ": cannot parse " + what + " '" + text + "'", line);
    }
    return value;
}

class KeyIndex {
public:
    explicit KeyIndex(std::vector<std::string>& keys) : keys_(keys) {}

    Index operator()(const std::string& key)
    {
        auto [it, inserted] = index_.try_emplace(key, keys_.size());
        if (inserted) {
            keys_.push_back(key);
        }
        return it->second;
    }

private:
    std::vector<std::string>& keys_;
    std::unordered_map<std::string, Index> index_;
};

}  // namespace

LoadedCorpus load_corpus(const CorpusFiles& files)
{
    Corpus raw;
    KeyIndex author_index(raw.authors);
    KeyIndex paper_index(raw.papers);
    csv::Row row;

    {
        TableReader table(files.authorship_path, authorship_header);
        while (table.next(row)) {
            const Index a = author_index(row.fields[0]);
            const Index p = paper_index(row.fields[1]);
            raw.authorship.emplace_back(a, p);
        }
    }
    {
        TableReader table(files.citations_path, citations_header);
        while (table.next(row)) {
            const Index citing = paper_index(row.fields[0]);
            const Index cited = paper_index(row.fields[1]);
            raw.citations.emplace_back(citing, cited);
        }
    }
    if (files.metadata_path) {
        TableReader table(*files.metadata_path, metadata_header);
        std::vector<std::pair<Index, PaperMetadata>> records;
        std::vector<std::size_t> seen_at;
        while (table.next(row)) {
            const Index p = paper_index(row.fields[0]);
            PaperMetadata meta;
            meta.year = parse_number<int>(row.fields[1], "year", table, row.line);
            meta.venue = row.fields[2];
            meta.reported_times_cited =
                parse_number<std::uint64_t>(row.fields[3], "reported_times_cited", table, row.line);
            if (seen_at.size() <= p) {
                seen_at.resize(p + 1, 0);
            }
            if (seen_at[p] != 0) {
                throw DataError(table.path().string() + ": duplicate metadata for paper '"
                                    + row.fields[0] + "' (first at line "
                                    + std::to_string(seen_at[p]) + ")",
                                row.line);
            }
            seen_at[p] = row.line;
            records.emplace_back(p, std::move(meta));
        }
        raw.metadata.resize(raw.papers.size());
        for (auto& [p, meta] : records) {
            raw.metadata[p] = std::move(meta);
        }
    }

    LoadedCorpus out;
    out.report = validate(raw);
    out.corpus = sanitize(raw);
    return out;
}

void write_corpus(const Corpus& corpus, const CorpusFiles& files)
{
    {
        auto out = open_output(files.authorship_path);
        out << authorship_header << '\n';
        for (const auto& [a, p] : corpus.authorship) {
            out << csv::escape(corpus.authors.at(a)) << ',' << csv::escape(corpus.papers.at(p))
                << '\n';
        }
        finish(out, files.authorship_path);
    }
    {
        auto out = open_output(files.citations_path);
        out << citations_header << '\n';
        for (const auto& [citing, cited] : corpus.citations) {
            out << csv::escape(corpus.papers.at(citing)) << ','
                << csv::escape(corpus.papers.at(cited)) << '\n';
        }
        finish(out, files.citations_path);
    }
    if (files.metadata_path) {
        auto out = open_output(*files.metadata_path);
        out << metadata_header << '\n';
        for (std::size_t p = 0; p < corpus.metadata.size(); ++p) {
            if (const auto& meta = corpus.metadata[p]) {
                out << csv::escape(corpus.papers.at(p)) << ',' << meta->year << ','
                    << csv::escape(meta->venue) << ',' << meta->reported_times_cited << '\n';
            }
        }
        finish(out, *files.metadata_path);
    }
}

std::string format_score(double value)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string format_scores(const RankTable& table)
{
    std::string text(scores_header);
    text += '\n';
    for (const auto& e : table.entries) {
        text += format_score(e.rank) + ',' + csv::escape(e.entity) + ',' + format_score(e.score)
                + '\n';
    }
    return text;
}

void write_scores(const std::filesystem::path& path, const RankTable& table)
{
    auto out = open_output(path);
    out << format_scores(table);
    finish(out, path);
}

RankTable read_scores(const std::filesystem::path& path, TiePolicy tie_policy)
{
    TableReader table(path, scores_header);
    RankTable out;
    out.tie_policy = tie_policy;
    csv::Row row;
    while (table.next(row)) {
        RankEntry e;
        e.rank = parse_number<double>(row.fields[0], "rank", table, row.line);
        e.entity = row.fields[1];
        e.score = parse_number<double>(row.fields[2], "score", table, row.line);
        out.entries.push_back(std::move(e));
    }
    return out;
}

}  // namespace citerank
