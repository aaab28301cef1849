#pragma once

// Shared corpora and brute-force helpers for the test binaries.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "citerank/citerank.hpp"

namespace fixtures {

using citerank::Corpus;
using citerank::Index;

// a1 writes p1-p3, a2 writes p4-p5, a3 writes p6; p4->p5, p4->p6, p5->p6.
inline Corpus toy()
{
    Corpus c;
    c.authors = {"a1", "a2", "a3"};
    c.papers = {"p1", "p2", "p3", "p4", "p5", "p6"};
    c.authorship = {{0, 0}, {0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}};
    c.citations = {{3, 4}, {3, 5}, {4, 5}};
    return c;
}

// toy() plus p6->p1.
inline Corpus toy_cycle()
{
    Corpus c = toy();
    c.citations.emplace_back(5, 0);
    return c;
}

inline std::vector<double> dense_row(const citerank::SparseMatrix& A, Index r)
{
    std::vector<double> row(A.cols(), 0.0);
    for (Index c = 0; c < A.cols(); ++c) {
        row[c] = A.at(r, c);
    }
    return row;
}

struct RandomCorpusOptions {
    std::size_t max_authors = 100;
    std::size_t max_papers = 100;
    double authorship_density = 0.05;
    double citation_density = 0.05;
    /// Every paper gets at least one author.
    bool cover_papers = true;
    /// Every author gets at least one paper.
    bool cover_authors = true;
};

// Clean corpus: no self-citations, no repeated edges.
inline Corpus random_corpus(std::mt19937_64& rng, const RandomCorpusOptions& opt = {})
{
    std::uniform_int_distribution<std::size_t> pick_m(1, opt.max_authors);
    std::uniform_int_distribution<std::size_t> pick_n(1, opt.max_papers);
    std::bernoulli_distribution authored(opt.authorship_density);
    std::bernoulli_distribution cites(opt.citation_density);
    const std::size_t m = pick_m(rng);
    const std::size_t n = pick_n(rng);

    std::vector<std::vector<bool>> has(m, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t p = 0; p < n; ++p) {
            has[a][p] = authored(rng);
        }
    }
    if (opt.cover_papers) {
        for (std::size_t p = 0; p < n; ++p) {
            has[std::uniform_int_distribution<std::size_t>(0, m - 1)(rng)][p] = true;
        }
    }
    if (opt.cover_authors) {
        for (std::size_t a = 0; a < m; ++a) {
            has[a][std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)] = true;
        }
    }

    Corpus c;
    for (std::size_t a = 0; a < m; ++a) {
        c.authors.push_back("a" + std::to_string(a));
    }
    for (std::size_t p = 0; p < n; ++p) {
        c.papers.push_back("p" + std::to_string(p));
    }
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t p = 0; p < n; ++p) {
            if (has[a][p]) {
                c.authorship.emplace_back(a, p);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && cites(rng)) {
                c.citations.emplace_back(i, j);
            }
        }
    }
    return c;
}

// Relabel authors and papers by random permutations; returns the maps new->old.
struct Permuted {
    Corpus corpus;
    std::vector<Index> author_from;
    std::vector<Index> paper_from;
};

inline Permuted permute(const Corpus& c, std::mt19937_64& rng)
{
    Permuted out;
    out.author_from.resize(c.authors.size());
    out.paper_from.resize(c.papers.size());
    for (Index i = 0; i < out.author_from.size(); ++i) {
        out.author_from[i] = i;
    }
    for (Index i = 0; i < out.paper_from.size(); ++i) {
        out.paper_from[i] = i;
    }
    std::shuffle(out.author_from.begin(), out.author_from.end(), rng);
    std::shuffle(out.paper_from.begin(), out.paper_from.end(), rng);
    std::vector<Index> author_to(c.authors.size()), paper_to(c.papers.size());
    for (Index i = 0; i < out.author_from.size(); ++i) {
        author_to[out.author_from[i]] = i;
        out.corpus.authors.push_back(c.authors[out.author_from[i]]);
    }
    for (Index i = 0; i < out.paper_from.size(); ++i) {
        paper_to[out.paper_from[i]] = i;
        out.corpus.papers.push_back(c.papers[out.paper_from[i]]);
    }
    for (auto [a, p] : c.authorship) {
        out.corpus.authorship.emplace_back(author_to[a], paper_to[p]);
    }
    for (auto [i, j] : c.citations) {
        out.corpus.citations.emplace_back(paper_to[i], paper_to[j]);
    }
    return out;
}

// Largest h with at least h entries >= h, by trying every candidate.
inline std::int64_t brute_h_index(const std::vector<std::int64_t>& cites)
{
    std::int64_t best = 0;
    for (std::int64_t h = 0; h <= static_cast<std::int64_t>(cites.size()); ++h) {
        const auto at_least = std::count_if(cites.begin(), cites.end(),
                                            [h](std::int64_t c) { return c >= h; });
        if (at_least >= h) {
            best = h;
        }
    }
    return best;
}

// Gini as mean absolute difference over twice the mean.
inline double mad_gini(const std::vector<double>& xs)
{
    double diff = 0.0;
    double sum = 0.0;
    for (double a : xs) {
        sum += a;
        for (double b : xs) {
            diff += std::abs(a - b);
        }
    }
    const double n = static_cast<double>(xs.size());
    return diff / (2.0 * n * sum);
}

inline std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& stem)
    {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path()
                / (stem + "-" + std::to_string(rd()) + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir()
    {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline const char* toy_authorship_csv =
    "author_key,paper_id\na1,p1\na1,p2\na1,p3\na2,p4\na2,p5\na3,p6\n";
inline const char* toy_citations_csv =
    "citing_paper_id,cited_paper_id\np4,p5\np4,p6\np5,p6\n";

}  // namespace fixtures
