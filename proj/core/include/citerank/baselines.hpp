#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "citerank/bibgraph.hpp"

namespace citerank {

/// Integer mode credits every coauthor with each citation; fractional mode splits it by W.
enum class CitationMode { integer, fractional };

/// Parse "integer" / "fractional"; throws std::invalid_argument otherwise.
CitationMode parse_citation_mode(std::string_view name);

struct AuthorIndicators {
    std::int64_t publication_count = 0;
    double fractional_publication_count = 0.0;
    std::int64_t citation_count = 0;
    double fractional_citation_count = 0.0;
    std::int64_t h_index = 0;
};

/// Papers per author (row sums of M).
std::vector<std::int64_t> publication_counts(const SparseMatrix& M);

/// Row sums of W.
std::vector<double> fractional_publication_counts(const SparseMatrix& W);

/// Citations received per paper (column sums of C).
std::vector<std::int64_t> paper_citation_counts(const SparseMatrix& C);

/// Citations received by each author's papers, under the given credit mode.
std::vector<double> author_citation_counts(const SparseMatrix& M, const SparseMatrix& C,
                                           CitationMode mode);

/// Largest h such that at least h entries are >= h.
std::int64_t h_index(std::span<const std::int64_t> per_paper_citations);

/// h-index of every author, using only citations inside the corpus.
std::vector<std::int64_t> author_h_indices(const SparseMatrix& M, const SparseMatrix& C);

std::vector<AuthorIndicators> author_indicators(const BibMatrices& mats);

}  // namespace citerank
