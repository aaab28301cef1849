#include "citerank/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "citerank/errors.hpp"

namespace citerank {

namespace {

std::vector<std::int64_t> to_counts(const std::vector<double>& sums)
{
    std::vector<std::int64_t> out(sums.size());
    std::transform(sums.begin(), sums.end(), out.begin(),
                   [](double s) { return static_cast<std::int64_t>(std::llround(s)); });
    return out;
}

}  // namespace

CitationMode parse_citation_mode(std::string_view name)
{
    if (name == "integer") {
        return CitationMode::integer;
    }
    if (name == "fractional") {
        return CitationMode::fractional;
    }
    throw std::invalid_argument("unknown citation mode '" + std::string(name) + "'");
}

std::vector<std::int64_t> publication_counts(const SparseMatrix& M)
{
    return to_counts(row_sums(M));
}

std::vector<double> fractional_publication_counts(const SparseMatrix& W)
{
    return row_sums(W);
}

std::vector<std::int64_t> paper_citation_counts(const SparseMatrix& C)
{
    return to_counts(col_sums(C));
}

std::vector<double> author_citation_counts(const SparseMatrix& M, const SparseMatrix& C,
                                           CitationMode mode)
{
    if (M.cols() != C.rows() || C.rows() != C.cols()) {
        throw DimensionError("author_citation_counts: M and C disagree on paper count");
    }
    const auto cites = col_sums(C);
    switch (mode) {
    case CitationMode::integer:
        return matvec(M, cites);
    case CitationMode::fractional:
        return matvec(column_normalize(M), cites);
    }
    throw std::invalid_argument("unknown citation mode");
}

std::int64_t h_index(std::span<const std::int64_t> per_paper_citations)
{
    std::vector<std::int64_t> sorted(per_paper_citations.begin(), per_paper_citations.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>{});
    std::int64_t h = 0;
    while (static_cast<std::size_t>(h) < sorted.size() && sorted[static_cast<std::size_t>(h)] > h) {
        ++h;
    }
    return h;
}

std::vector<std::int64_t> author_h_indices(const SparseMatrix& M, const SparseMatrix& C)
{
    const auto cites = paper_citation_counts(C);
    std::vector<std::int64_t> out(M.rows(), 0);
    std::vector<std::int64_t> own;
    for (Index i = 0; i < M.rows(); ++i) {
        own.clear();
        for (Index p : M.row_cols(i)) {
            own.push_back(cites[p]);
        }
        out[i] = h_index(own);
    }
    return out;
}

std::vector<AuthorIndicators> author_indicators(const BibMatrices& mats)
{
    const auto pubs = publication_counts(mats.M);
    const auto frac_pubs = fractional_publication_counts(mats.W);
    const auto cites = author_citation_counts(mats.M, mats.C, CitationMode::integer);
    const auto frac_cites = author_citation_counts(mats.M, mats.C, CitationMode::fractional);
    const auto h = author_h_indices(mats.M, mats.C);

    std::vector<AuthorIndicators> out(mats.m);
    for (Index i = 0; i < mats.m; ++i) {
        out[i] = {pubs[i], frac_pubs[i], static_cast<std::int64_t>(std::llround(cites[i])),
                  frac_cites[i], h[i]};
    }
    return out;
}

}  // namespace citerank
