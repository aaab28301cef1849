#include "citerank/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "citerank/baselines.hpp"

namespace citerank {

namespace {

std::vector<double> as_doubles(const std::vector<std::int64_t>& v)
{
    return {v.begin(), v.end()};
}

std::optional<double> safe_gini(const std::vector<double>& v)
{
    if (v.empty() || std::all_of(v.begin(), v.end(), [](double e) { return e == 0.0; })) {
        return std::nullopt;
    }
    return gini(v);
}

std::optional<double> safe_spearman(const std::vector<double>& a, const std::vector<double>& b)
{
    try {
        return spearman(a, b);
    } catch (const std::domain_error&) {
        return std::nullopt;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

RankTable top_table(const std::vector<std::string>& keys, const std::vector<double>& scores,
                    std::size_t top_n)
{
    auto table = make_rank_table(keys, scores, TiePolicy::ordinal);
    if (table.entries.size() > top_n) {
        table.entries.resize(top_n);
    }
    return table;
}

SpearmanMatrix spearman_matrix(const std::vector<RankMethod>& methods,
                               const std::vector<const std::vector<double>*>& scores)
{
    SpearmanMatrix out{methods, {}};
    const std::size_t k = methods.size();
    out.rho.assign(k, std::vector<std::optional<double>>(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            auto rho = safe_spearman(*scores[i], *scores[j]);
            out.rho[i][j] = rho;
            out.rho[j][i] = rho;
        }
    }
    return out;
}

std::vector<VenueShare> venue_composition(const Corpus& corpus, const std::vector<double>& scores)
{
    auto table = make_rank_table(corpus.papers, scores, TiePolicy::ordinal);
    std::map<std::string, std::size_t> index;
    for (std::size_t p = 0; p < corpus.papers.size(); ++p) {
        index.emplace(corpus.papers[p], p);
    }
    std::map<std::string, std::size_t> counts;
    const std::size_t limit = std::min(venue_top_papers, table.entries.size());
    for (std::size_t k = 0; k < limit; ++k) {
        const std::size_t p = index.at(table.entries[k].entity);
        const auto& meta = p < corpus.metadata.size() ? corpus.metadata[p] : std::nullopt;
        ++counts[meta ? (meta->venue.empty() ? "(none)" : meta->venue) : "(unknown)"];
    }
    std::vector<VenueShare> out;
    for (auto& [venue, n] : counts) {
        out.push_back({venue, n});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const VenueShare& a, const VenueShare& b) { return a.papers > b.papers; });
    return out;
}

std::string fmt(const char* spec, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string fmt_optional(const std::optional<double>& v)
{
    return v ? fmt("%.4f", *v) : "undefined";
}

void render_table(std::string& out, const RankTable& table, std::string_view entity)
{
    out += "| rank | " + std::string(entity) + " | score |\n";
    out += "|---:|:---|---:|\n";
    for (const auto& e : table.entries) {
        out += "| " + fmt("%.0f", e.rank) + " | " + e.entity + " | " + fmt("%.6g", e.score) + " |\n";
    }
    out += '\n';
}

void render_spearman(std::string& out, const SpearmanMatrix& m)
{
    out += "|";
    for (auto method : m.methods) {
        out += " | " + std::string(to_string(method));
    }
    out += " |\n|---";
    for (std::size_t j = 0; j < m.methods.size(); ++j) {
        out += "|---:";
    }
    out += "|\n";
    for (std::size_t i = 0; i < m.methods.size(); ++i) {
        out += "| " + std::string(to_string(m.methods[i]));
        for (std::size_t j = 0; j < m.methods.size(); ++j) {
            out += " | " + fmt_optional(m.rho[i][j]);
        }
        out += " |\n";
    }
    out += '\n';
}

}  // namespace

RankMethod parse_rank_method(std::string_view name)
{
    if (name == "citex") {
        return RankMethod::citex;
    }
    if (name == "caps") {
        return RankMethod::caps;
    }
    if (name == "pubcount" || name == "publication_count") {
        return RankMethod::pubcount;
    }
    if (name == "citecount" || name == "citation_count") {
        return RankMethod::citecount;
    }
    if (name == "hindex" || name == "h_index") {
        return RankMethod::hindex;
    }
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

std::string_view to_string(RankMethod method)
{
    switch (method) {
    case RankMethod::citex:
        return "citex";
    case RankMethod::caps:
        return "caps";
    case RankMethod::pubcount:
        return "pubcount";
    case RankMethod::citecount:
        return "citecount";
    case RankMethod::hindex:
        return "hindex";
    }
    return "?";
}

bool MethodScores::converged() const
{
    return std::all_of(convergence.begin(), convergence.end(),
                       [](const auto& c) { return c.second.converged; });
}

MethodScores compute_method_scores(const BibMatrices& mats, RankMethod method,
                                   const IterationConfig& cfg)
{
    MethodScores out;
    out.method = method;
    switch (method) {
    case RankMethod::citex: {
        auto r = citex_scores(mats, cfg);
        out.author = std::move(r.x.values);
        out.paper = std::move(r.y.values);
        out.convergence = {{"author", r.x_report}, {"paper", r.y_report}};
        break;
    }
    case RankMethod::caps: {
        auto r = caps_scores(mats, cfg);
        out.author = std::move(r.x.values);
        out.paper = std::move(r.y.values);
        out.convergence = {{"author", r.x_report}};
        break;
    }
    case RankMethod::pubcount:
        out.author = as_doubles(publication_counts(mats.M));
        break;
    case RankMethod::citecount:
        out.author = author_citation_counts(mats.M, mats.C, CitationMode::integer);
        out.paper = as_doubles(paper_citation_counts(mats.C));
        break;
    case RankMethod::hindex:
        out.author = as_doubles(author_h_indices(mats.M, mats.C));
        break;
    }
    return out;
}

bool ComparisonReport::all_converged() const
{
    return std::all_of(methods.begin(), methods.end(), [](const MethodSummary& s) {
        return std::all_of(s.convergence.begin(), s.convergence.end(),
                           [](const auto& c) { return c.second.converged; });
    });
}

ComparisonReport comparison_report(const Corpus& corpus, const std::vector<RankMethod>& methods,
                                   std::size_t top_n, const IterationConfig& cfg)
{
    if (methods.empty()) {
        throw std::invalid_argument("comparison_report: no methods requested");
    }
    std::vector<RankMethod> unique;
    for (auto m : methods) {
        if (std::find(unique.begin(), unique.end(), m) == unique.end()) {
            unique.push_back(m);
        }
    }

    const auto mats = build_matrices(corpus);
    ComparisonReport report;
    report.n_authors = mats.m;
    report.n_papers = mats.n;
    report.n_citations = mats.C.nnz();
    report.top_n = top_n;
    report.has_metadata = corpus.has_metadata();

    std::vector<MethodScores> scores;
    for (auto m : unique) {
        scores.push_back(compute_method_scores(mats, m, cfg));
    }

    for (const auto& s : scores) {
        MethodSummary summary;
        summary.method = s.method;
        summary.top_authors = top_table(corpus.authors, s.author, top_n);
        summary.author_gini = safe_gini(s.author);
        summary.convergence = s.convergence;
        if (s.paper) {
            summary.top_papers = top_table(corpus.papers, *s.paper, top_n);
            summary.paper_gini = safe_gini(*s.paper);
            if (report.has_metadata) {
                summary.top100_venues = venue_composition(corpus, *s.paper);
            }
        }
        report.methods.push_back(std::move(summary));
    }

    if (scores.size() >= 2) {
        std::vector<const std::vector<double>*> author_scores;
        for (const auto& s : scores) {
            author_scores.push_back(&s.author);
        }
        report.author_spearman = spearman_matrix(unique, author_scores);
    }
    std::vector<RankMethod> paper_methods;
    std::vector<const std::vector<double>*> paper_scores;
    for (const auto& s : scores) {
        if (s.paper) {
            paper_methods.push_back(s.method);
            paper_scores.push_back(&*s.paper);
        }
    }
    if (paper_methods.size() >= 2) {
        report.paper_spearman = spearman_matrix(paper_methods, paper_scores);
    }
    return report;
}

std::string render(const ComparisonReport& report)
{
    std::string out;
    out += "# Ranking comparison\n\n";
    out += "authors: " + std::to_string(report.n_authors) + "\n";
    out += "papers: " + std::to_string(report.n_papers) + "\n";
    out += "citations: " + std::to_string(report.n_citations) + "\n";
    out += "methods:";
    for (const auto& s : report.methods) {
        out += " " + std::string(to_string(s.method));
    }
    out += "\n\n";

    out += "## Top " + std::to_string(report.top_n) + " authors\n\n";
    for (const auto& s : report.methods) {
        out += "### " + std::string(to_string(s.method)) + "\n\n";
        render_table(out, s.top_authors, "author");
    }

    bool any_papers = std::any_of(report.methods.begin(), report.methods.end(),
                                  [](const MethodSummary& s) { return s.top_papers.has_value(); });
    if (any_papers) {
        out += "## Top " + std::to_string(report.top_n) + " papers\n\n";
        for (const auto& s : report.methods) {
            if (s.top_papers) {
                out += "### " + std::string(to_string(s.method)) + "\n\n";
                render_table(out, *s.top_papers, "paper");
            }
        }
    }

    out += "## Gini coefficients\n\n";
    for (const auto& s : report.methods) {
        out += "gini " + std::string(to_string(s.method)) + " author=" + fmt_optional(s.author_gini);
        if (s.top_papers) {
            out += " paper=" + fmt_optional(s.paper_gini);
        }
        out += '\n';
    }
    out += '\n';

    if (report.author_spearman) {
        out += "## Spearman rank correlation (authors)\n\n";
        render_spearman(out, *report.author_spearman);
    }
    if (report.paper_spearman) {
        out += "## Spearman rank correlation (papers)\n\n";
        render_spearman(out, *report.paper_spearman);
    }

    if (report.has_metadata && any_papers) {
        out += "## Venue composition of top " + std::to_string(venue_top_papers) + " papers\n\n";
        for (const auto& s : report.methods) {
            if (!s.top_papers) {
                continue;
            }
            out += "### " + std::string(to_string(s.method)) + "\n\n";
            for (const auto& v : s.top100_venues) {
                out += "- " + v.venue + ": " + std::to_string(v.papers) + "\n";
            }
            out += '\n';
        }
    }

    bool any_iterated = false;
    for (const auto& s : report.methods) {
        any_iterated = any_iterated || !s.convergence.empty();
    }
    if (any_iterated) {
        out += "## Convergence\n\n";
        for (const auto& s : report.methods) {
            for (const auto& [entity, c] : s.convergence) {
                out += std::string(to_string(s.method)) + " " + entity
                       + ": iterations=" + std::to_string(c.iterations)
                       + " residual=" + fmt("%.3e", c.final_residual)
                       + " converged=" + (c.converged ? "true" : "false")
                       + (c.all_zero ? " all_zero=true" : "") + "\n";
            }
        }
    }
    return out;
}

}  // namespace citerank
