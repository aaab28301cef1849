#include "citerank/bibgraph.hpp"

#include <algorithm>
#include <unordered_set>

#include "citerank/errors.hpp"

namespace citerank {

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<Index, Index>& p) const noexcept
    {
        return std::hash<Index>{}(p.first) * 0x9e3779b97f4a7c15ULL ^ std::hash<Index>{}(p.second);
    }
};

// Single pass over the corpus edges, routing each to report counters and/or a
// clean edge list. Shared by validate() and sanitize() so both agree exactly.
struct EdgeScan {
    ValidationReport report;
    std::vector<AuthorshipEdge> authorship;
    std::vector<CitationEdge> citations;
};

EdgeScan scan_edges(const Corpus& corpus)
{
    EdgeScan scan;
    const Index m = corpus.author_count();
    const Index n = corpus.paper_count();

    std::vector<bool> paper_has_author(n, false);
    std::vector<bool> author_has_paper(m, false);

    std::unordered_set<std::pair<Index, Index>, PairHash> seen;
    seen.reserve(corpus.authorship.size());
    for (const auto& edge : corpus.authorship) {
        if (edge.first >= m || edge.second >= n) {
            ++scan.report.dangling_authorships;
            continue;
        }
        if (!seen.insert(edge).second) {
            ++scan.report.duplicate_authorships;
            continue;
        }
        author_has_paper[edge.first] = true;
        paper_has_author[edge.second] = true;
        scan.authorship.push_back(edge);
    }

    seen.clear();
    seen.reserve(corpus.citations.size());
    for (const auto& edge : corpus.citations) {
        if (edge.first >= n || edge.second >= n) {
            ++scan.report.dangling_citations;
            continue;
        }
        if (edge.first == edge.second) {
            ++scan.report.self_citations_stripped;
            continue;
        }
        if (!seen.insert(edge).second) {
            ++scan.report.duplicate_citations;
            continue;
        }
        scan.citations.push_back(edge);
    }

    scan.report.zero_author_papers =
        static_cast<std::size_t>(std::count(paper_has_author.begin(), paper_has_author.end(), false));
    scan.report.zero_paper_authors =
        static_cast<std::size_t>(std::count(author_has_paper.begin(), author_has_paper.end(), false));
    return scan;
}

}  // namespace

bool Corpus::has_metadata() const
{
    return std::any_of(metadata.begin(), metadata.end(), [](const auto& m) { return m.has_value(); });
}

ValidationReport validate(const Corpus& corpus)
{
    return scan_edges(corpus).report;
}

Corpus sanitize(const Corpus& corpus)
{
    auto scan = scan_edges(corpus);
    Corpus out;
    out.authors = corpus.authors;
    out.papers = corpus.papers;
    out.authorship = std::move(scan.authorship);
    out.citations = std::move(scan.citations);
    out.metadata = corpus.metadata;
    return out;
}

BibMatrices build_matrices(const Corpus& corpus)
{
    const auto scan = scan_edges(corpus);
    const Index m = corpus.author_count();
    const Index n = corpus.paper_count();

    std::vector<Triplet> entries;
    entries.reserve(scan.authorship.size());
    for (const auto& [author, paper] : scan.authorship) {
        entries.push_back({author, paper, 1.0});
    }
    auto M = SparseMatrix::from_triplets(entries, m, n);

    entries.clear();
    entries.reserve(scan.citations.size());
    for (const auto& [citing, cited] : scan.citations) {
        entries.push_back({citing, cited, 1.0});
    }
    auto C = SparseMatrix::from_triplets(entries, n, n);

    auto W = column_normalize(M);
    return BibMatrices{std::move(M), std::move(W), std::move(C), m, n};
}

SparseMatrix author_paper_citation_matrix(const SparseMatrix& W, const SparseMatrix& C)
{
    if (C.rows() != C.cols()) {
        throw DimensionError("citation matrix must be square");
    }
    return multiply(W, C);
}

SparseMatrix author_citation_matrix(const SparseMatrix& W, const SparseMatrix& L)
{
    if (W.rows() != L.rows() || W.cols() != L.cols()) {
        throw DimensionError("author_citation_matrix: W and L must have the same shape");
    }
    return multiply(W, transpose(L));
}

}  // namespace citerank
