#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "citerank/bibgraph.hpp"
#include "citerank/metrics.hpp"

namespace citerank {

inline constexpr std::string_view authorship_header = "author_key,paper_id";
inline constexpr std::string_view citations_header = "citing_paper_id,cited_paper_id";
inline constexpr std::string_view metadata_header = "paper_id,year,venue,reported_times_cited";
inline constexpr std::string_view scores_header = "rank,entity,score";

struct CorpusFiles {
    std::filesystem::path authorship_path;
    std::filesystem::path citations_path;
    std::optional<std::filesystem::path> metadata_path;
};

struct LoadedCorpus {
    /// Sanitized: self-citations and repeated edges already removed.
    Corpus corpus;
    /// Anomalies found in the files as written.
    ValidationReport report;
};

/** Read a corpus from CSV edge lists.
 *
 * Authors and papers are indexed in order of first appearance: the
 * authorship file first, then the citations file (citing before cited), then
 * the metadata file. Papers that only appear in citations or metadata are
 * kept as zero-author papers. Throws IoError when a file cannot be read and
 * DataError (with the line number) on a bad header, a repeated header row, a
 * row with the wrong field count, an empty key, or an unparsable number.
 */
LoadedCorpus load_corpus(const CorpusFiles& files);

/// Write the corpus in the format load_corpus reads. Metadata is written only when
/// files.metadata_path is set; papers without metadata are skipped there.
void write_corpus(const Corpus& corpus, const CorpusFiles& files);

/// Scores use 12 significant digits, as written by write_scores.
std::string format_score(double value);

/// The exact bytes write_scores produces.
std::string format_scores(const RankTable& table);

/// CSV with header rank,entity,score. Throws IoError on failure.
void write_scores(const std::filesystem::path& path, const RankTable& table);

/// Parse a file produced by write_scores.
RankTable read_scores(const std::filesystem::path& path, TiePolicy tie_policy = TiePolicy::ordinal);

}  // namespace citerank
