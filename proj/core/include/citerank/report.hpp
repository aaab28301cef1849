#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "citerank/bibgraph.hpp"
#include "citerank/engines.hpp"
#include "citerank/metrics.hpp"

namespace citerank {

enum class RankMethod { citex, caps, pubcount, citecount, hindex };

/// Accepts the short names and the long aliases publication_count, citation_count, h_index.
/// Throws std::invalid_argument for anything else.
RankMethod parse_rank_method(std::string_view name);
std::string_view to_string(RankMethod method);

struct MethodScores {
    RankMethod method = RankMethod::citex;
    std::vector<double> author;
    /// Absent for methods that only score authors (pubcount, hindex).
    std::optional<std::vector<double>> paper;
    /// One entry per power iteration run; empty for closed-form indicators.
    std::vector<std::pair<std::string, ConvergenceReport>> convergence;

    bool converged() const;
};

MethodScores compute_method_scores(const BibMatrices& mats, RankMethod method,
                                   const IterationConfig& cfg = {});

struct VenueShare {
    std::string venue;
    std::size_t papers = 0;
};

struct MethodSummary {
    RankMethod method = RankMethod::citex;
    RankTable top_authors;
    std::optional<RankTable> top_papers;
    /// nullopt when the scores are all zero.
    std::optional<double> author_gini;
    std::optional<double> paper_gini;
    std::vector<std::pair<std::string, ConvergenceReport>> convergence;
    /// Venues of the top 100 papers, most frequent first. Empty without metadata.
    std::vector<VenueShare> top100_venues;
};

/// Square matrix over `methods`; nullopt where a side is constant.
struct SpearmanMatrix {
    std::vector<RankMethod> methods;
    std::vector<std::vector<std::optional<double>>> rho;
};

struct ComparisonReport {
    std::size_t n_authors = 0;
    std::size_t n_papers = 0;
    std::size_t n_citations = 0;
    std::size_t top_n = 0;
    bool has_metadata = false;
    std::vector<MethodSummary> methods;
    /// Present only with two or more methods.
    std::optional<SpearmanMatrix> author_spearman;
    /// Present only with two or more methods that score papers.
    std::optional<SpearmanMatrix> paper_spearman;

    bool all_converged() const;
};

inline constexpr std::size_t venue_top_papers = 100;

/** Side-by-side comparison of ranking methods.
 *
 * Repeated method names are reported once. Throws std::invalid_argument for an
 * empty method list.
 */
ComparisonReport comparison_report(const Corpus& corpus, const std::vector<RankMethod>& methods,
                                   std::size_t top_n, const IterationConfig& cfg = {});

/// Plain-text (Markdown) rendering; byte-identical for identical reports.
std::string render(const ComparisonReport& report);

}  // namespace citerank
