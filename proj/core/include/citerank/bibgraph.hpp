#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "citerank/sparse.hpp"

namespace citerank {

struct PaperMetadata {
    int year = 0;
    std::string venue;
    std::uint64_t reported_times_cited = 0;

    friend bool operator==(const PaperMetadata&, const PaperMetadata&) = default;
};

/// (author index, paper index)
using AuthorshipEdge = std::pair<Index, Index>;
/// (citing paper index, cited paper index)
using CitationEdge = std::pair<Index, Index>;

/** Authors, papers and the two edge lists that connect them.
 *
 * Author keys are opaque strings; no identity resolution is attempted. A
 * corpus may be assembled by hand with anomalies in it (self-citations,
 * repeated edges, indices past the end); validate() reports them and
 * build_matrices() drops them. Corpora returned by sanitize() and the CSV
 * loader are clean.
 */
struct Corpus {
    std::vector<std::string> authors;
    std::vector<std::string> papers;
    std::vector<AuthorshipEdge> authorship;
    std::vector<CitationEdge> citations;
    /// Either empty or one slot per paper.
    std::vector<std::optional<PaperMetadata>> metadata;

    Index author_count() const noexcept { return authors.size(); }
    Index paper_count() const noexcept { return papers.size(); }
    bool has_metadata() const;

    friend bool operator==(const Corpus&, const Corpus&) = default;
};

struct ValidationReport {
    std::size_t self_citations_stripped = 0;
    std::size_t zero_author_papers = 0;
    std::size_t zero_paper_authors = 0;
    std::size_t dangling_citations = 0;
    std::size_t dangling_authorships = 0;
    std::size_t duplicate_authorships = 0;
    std::size_t duplicate_citations = 0;

    std::size_t duplicate_edges_collapsed() const noexcept
    {
        return duplicate_authorships + duplicate_citations;
    }
    /// Self-citations, dangling endpoints and duplicate edges. Zero-author papers and
    /// zero-paper authors are legal and only counted.
    std::size_t edge_anomalies() const noexcept
    {
        return self_citations_stripped + dangling_citations + dangling_authorships
               + duplicate_edges_collapsed();
    }
    std::size_t total_anomalies() const noexcept
    {
        return edge_anomalies() + zero_author_papers + zero_paper_authors;
    }

    friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// M (m x n, binary authorship), W (column-normalized M) and C (n x n, binary citations).
struct BibMatrices {
    SparseMatrix M;
    SparseMatrix W;
    SparseMatrix C;
    Index m = 0;
    Index n = 0;
};

ValidationReport validate(const Corpus& corpus);

/// Copy of the corpus with self-citations, dangling endpoints and repeated edges removed.
/// Edge order is first occurrence.
Corpus sanitize(const Corpus& corpus);

BibMatrices build_matrices(const Corpus& corpus);

/// L = W C; L[i,j] is the fractional citation mass author i directs at paper j.
SparseMatrix author_paper_citation_matrix(const SparseMatrix& W, const SparseMatrix& C);

/// W L^T; entry [i,a] is the fractional citation mass author i receives from author a.
SparseMatrix author_citation_matrix(const SparseMatrix& W, const SparseMatrix& L);

}  // namespace citerank
