#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "citerank/citerank.hpp"

namespace citerank::cli {

namespace {

namespace fs = std::filesystem;

struct InputOptions {
    std::string authorship;
    std::string citations;
    std::string metadata;
    std::string out;

    CorpusFiles files() const
    {
        CorpusFiles f{authorship, citations, std::nullopt};
        if (!metadata.empty()) {
            f.metadata_path = metadata;
        }
        return f;
    }
};

struct EngineOptions {
    double epsilon = 1e-9;
    std::size_t max_iter = 1000;

    IterationConfig config() const { return {epsilon, max_iter}; }
};

struct ScoreOptions {
    std::string method;
    std::string entity = "author";
};

struct CompareOptions {
    std::vector<std::string> methods;
    std::size_t top_n = 25;
};

struct GiniOptions {
    std::string method;
    std::string entity = "author";
    double fraction = 0.2;
};

struct SynthOptions {
    std::string out;
    std::string team_dist = "geometric";
    std::vector<std::size_t> plant_prolific;
    std::vector<std::size_t> plant_repeated;
    SynthConfig cfg;
};

void add_input_options(CLI::App& cmd, InputOptions& in, bool with_out = true)
{
    cmd.add_option("--authorship", in.authorship, "Authorship CSV (author_key,paper_id)")
        ->required();
    cmd.add_option("--citations", in.citations, "Citations CSV (citing_paper_id,cited_paper_id)")
        ->required();
    cmd.add_option("--metadata", in.metadata,
                   "Optional paper metadata CSV (paper_id,year,venue,reported_times_cited)");
    if (with_out) {
        cmd.add_option("--out", in.out, "Output file (standard output when omitted)");
    }
}

void add_engine_options(CLI::App& cmd, EngineOptions& eng)
{
    cmd.add_option("--epsilon", eng.epsilon, "Convergence tolerance on the L1 step size")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd.add_option("--max-iter", eng.max_iter, "Maximum power iterations")
        ->capture_default_str()
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
}

const std::vector<std::string> method_names = {"citex", "caps", "pubcount", "citecount", "hindex"};

// Writes machine output either to --out or to the fallback stream.
void emit(const std::string& path, const std::string& text, std::ostream& fallback)
{
    if (path.empty()) {
        fallback << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << text) || !file.flush()) {
        throw IoError("cannot write '" + path + "'");
    }
}

LoadedCorpus load(const InputOptions& in, std::ostream& err)
{
    auto loaded = load_corpus(in.files());
    const auto& c = loaded.corpus;
    err << "loaded " << c.author_count() << " authors, " << c.paper_count() << " papers, "
        << c.citations.size() << " citations\n";
    if (loaded.report.edge_anomalies() > 0) {
        err << "warning: " << loaded.report.edge_anomalies()
            << " edge anomalies dropped (run 'validate' for details)\n";
    }
    return loaded;
}

std::string convergence_lines(const MethodScores& s)
{
    std::string text;
    for (const auto& [entity, c] : s.convergence) {
        char residual[32];
        std::snprintf(residual, sizeof residual, "%.6e", c.final_residual);
        text += std::string(to_string(s.method)) + " " + entity
                + " iterations=" + std::to_string(c.iterations) + " residual=" + residual
                + " converged=" + (c.converged ? "true" : "false")
                + " all_zero=" + (c.all_zero ? "true" : "false") + "\n";
    }
    return text;
}

void warn_degenerate(const MethodScores& s, std::ostream& err)
{
    for (const auto& [entity, c] : s.convergence) {
        if (c.all_zero) {
            err << "warning: all-zero fixed point (" << to_string(s.method) << " " << entity
                << " scores)\n";
        }
        if (!c.converged) {
            err << "warning: " << to_string(s.method) << " " << entity
                << " scores did not converge within " << c.iterations
                << " iterations; best iterate written\n";
        }
    }
}

const std::vector<double>& pick_entity(const MethodScores& s, const std::string& entity)
{
    if (entity == "paper") {
        if (!s.paper) {
            throw std::invalid_argument("method '" + std::string(to_string(s.method))
                                        + "' does not score papers");
        }
        return *s.paper;
    }
    return s.author;
}

int cmd_validate(const InputOptions& in, std::ostream& out, std::ostream& err)
{
    const auto loaded = load(in, err);
    const auto& r = loaded.report;
    const auto& c = loaded.corpus;
    std::ostringstream text;
    text << "authors=" << c.author_count() << '\n'
         << "papers=" << c.paper_count() << '\n'
         << "authorship_edges=" << c.authorship.size() << '\n'
         << "citation_edges=" << c.citations.size() << '\n'
         << "self_citations_stripped=" << r.self_citations_stripped << '\n'
         << "zero_author_papers=" << r.zero_author_papers << '\n'
         << "zero_paper_authors=" << r.zero_paper_authors << '\n'
         << "dangling_citations=" << r.dangling_citations << '\n'
         << "dangling_authorships=" << r.dangling_authorships << '\n'
         << "duplicate_edges_collapsed=" << r.duplicate_edges_collapsed() << '\n';
    emit(in.out, text.str(), out);
    return ok;
}

int cmd_score(const InputOptions& in, const EngineOptions& eng, const ScoreOptions& opt,
              std::ostream& out, std::ostream& err)
{
    const auto method = parse_rank_method(opt.method);
    const auto loaded = load(in, err);
    const auto mats = build_matrices(loaded.corpus);
    const auto scores = compute_method_scores(mats, method, eng.config());
    const auto& values = pick_entity(scores, opt.entity);
    const auto& keys = opt.entity == "paper" ? loaded.corpus.papers : loaded.corpus.authors;
    const auto table = make_rank_table(keys, values, TiePolicy::ordinal);

    emit(in.out, format_scores(table), out);

    warn_degenerate(scores, err);
    if (!scores.convergence.empty()) {
        const auto status = convergence_lines(scores);
        if (in.out.empty()) {
            err << status;
        } else {
            emit(in.out + ".report", status, out);
        }
    }
    return scores.converged() ? ok : not_converged;
}

int cmd_compare(const InputOptions& in, const EngineOptions& eng, const CompareOptions& opt,
                std::ostream& out, std::ostream& err)
{
    std::vector<RankMethod> methods;
    for (const auto& name : opt.methods) {
        methods.push_back(parse_rank_method(name));
    }
    const auto loaded = load(in, err);
    const auto report = comparison_report(loaded.corpus, methods, opt.top_n, eng.config());
    emit(in.out, render(report), out);
    for (const auto& s : report.methods) {
        for (const auto& [entity, c] : s.convergence) {
            if (c.all_zero) {
                err << "warning: all-zero fixed point (" << to_string(s.method) << " " << entity
                    << " scores)\n";
            }
        }
    }
    if (!report.all_converged()) {
        err << "warning: at least one method did not converge; see the Convergence section\n";
        return not_converged;
    }
    return ok;
}

int cmd_gini(const InputOptions& in, const EngineOptions& eng, const GiniOptions& opt,
             std::ostream& out, std::ostream& err)
{
    const auto method = parse_rank_method(opt.method);
    if (!(opt.fraction > 0.0 && opt.fraction <= 1.0)) {
        throw std::invalid_argument("--fraction must lie in (0, 1]");
    }
    const auto loaded = load(in, err);
    const auto mats = build_matrices(loaded.corpus);
    const auto scores = compute_method_scores(mats, method, eng.config());
    const auto& values = pick_entity(scores, opt.entity);
    warn_degenerate(scores, err);

    const bool defined =
        std::any_of(values.begin(), values.end(), [](double v) { return v != 0.0; });
    std::ostringstream text;
    text << "method=" << to_string(method) << '\n'
         << "entity=" << opt.entity << '\n'
         << "n=" << values.size() << '\n';
    if (defined) {
        text << "gini=" << format_score(gini(values)) << '\n'
             << "top_share_fraction=" << format_score(opt.fraction) << '\n'
             << "top_share=" << format_score(top_share(values, opt.fraction)) << '\n';
    } else {
        text << "gini=undefined\n"
             << "top_share_fraction=" << format_score(opt.fraction) << '\n'
             << "top_share=undefined\n";
    }
    emit(in.out, text.str(), out);
    return scores.converged() ? ok : not_converged;
}

int cmd_synth(SynthOptions opt, std::ostream& err)
{
    opt.cfg.authors_per_paper.kind = opt.team_dist == "fixed" ? AuthorsPerPaper::Kind::fixed
                                                              : AuthorsPerPaper::Kind::geometric;
    for (auto quota : opt.plant_prolific) {
        opt.cfg.planted.push_back({PlantedPathology::Kind::prolific_uncited_solo_author, quota});
    }
    for (auto block : opt.plant_repeated) {
        opt.cfg.planted.push_back({PlantedPathology::Kind::repeated_author_list, block});
    }
    const auto corpus = generate(opt.cfg);

    std::error_code ec;
    fs::create_directories(opt.out, ec);
    if (ec) {
        throw IoError("cannot create directory '" + opt.out + "': " + ec.message());
    }
    const fs::path dir(opt.out);
    write_corpus(corpus, {dir / "authorship.csv", dir / "citations.csv", std::nullopt});
    err << "wrote " << corpus.author_count() << " authors, " << corpus.paper_count()
        << " papers, " << corpus.citations.size() << " citations to " << dir.string() << '\n';
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Coupled author and paper ranking (CITEX, CAPS) with bibliometric baselines",
                 "citerank"};
    app.require_subcommand(1);

    InputOptions in;
    EngineOptions eng;
    ScoreOptions score_opt;
    CompareOptions compare_opt;
    GiniOptions gini_opt;
    SynthOptions synth_opt;

    auto* validate_cmd = app.add_subcommand("validate", "Report anomalies in a corpus");
    add_input_options(*validate_cmd, in);

    auto* score_cmd = app.add_subcommand("score", "Rank authors or papers with one method");
    add_input_options(*score_cmd, in);
    add_engine_options(*score_cmd, eng);
    score_cmd->add_option("--method", score_opt.method, "citex|caps|pubcount|citecount|hindex")
        ->required()
        ->check(CLI::IsMember(method_names));
    score_cmd->add_option("--entity", score_opt.entity, "author|paper")
        ->capture_default_str()
        ->check(CLI::IsMember({"author", "paper"}));

    auto* compare_cmd = app.add_subcommand("compare", "Side-by-side report over several methods");
    add_input_options(*compare_cmd, in);
    add_engine_options(*compare_cmd, eng);
    compare_cmd->add_option("--methods", compare_opt.methods, "Comma-separated method list")
        ->required()
        ->delimiter(',')
        ->check(CLI::IsMember(method_names));
    compare_cmd->add_option("--top-n", compare_opt.top_n, "Rows per top-N table")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    auto* gini_cmd = app.add_subcommand("gini", "Gini coefficient and top share of a score vector");
    add_input_options(*gini_cmd, in);
    add_engine_options(*gini_cmd, eng);
    gini_cmd->add_option("--method", gini_opt.method, "citex|caps|pubcount|citecount|hindex")
        ->required()
        ->check(CLI::IsMember(method_names));
    gini_cmd->add_option("--entity", gini_opt.entity, "author|paper")
        ->capture_default_str()
        ->check(CLI::IsMember({"author", "paper"}));
    gini_cmd->add_option("--fraction", gini_opt.fraction, "Top fraction for the share statistic")
        ->capture_default_str();

    auto* synth_cmd =
        app.add_subcommand("synth", "Generate a preferential-attachment corpus as CSV files");
    auto& sc = synth_opt.cfg;
    synth_cmd->add_option("--out", synth_opt.out, "Output directory")->required();
    synth_cmd->add_option("--papers", sc.n_papers, "Number of papers")->capture_default_str();
    synth_cmd->add_option("--authors", sc.n_authors, "Size of the author pool")
        ->capture_default_str();
    synth_cmd->add_option("--citations-per-paper", sc.citations_per_paper, "Mean references")
        ->capture_default_str();
    synth_cmd->add_option("--attachment-offset", sc.attachment_offset,
                          "Additive in-degree offset for citation targets")
        ->capture_default_str();
    synth_cmd->add_option("--authors-per-paper", synth_opt.team_dist, "fixed|geometric")
        ->capture_default_str()
        ->check(CLI::IsMember({"fixed", "geometric"}));
    synth_cmd->add_option("--authors-per-paper-mean", sc.authors_per_paper.mean,
                          "Mean team size")
        ->capture_default_str();
    synth_cmd->add_option("--productivity-skew", sc.author_productivity_skew,
                          "Lotka exponent of author productivity (> 1)")
        ->capture_default_str();
    synth_cmd->add_option("--seed", sc.seed, "Random seed")->capture_default_str();
    synth_cmd->add_option("--plant-prolific", synth_opt.plant_prolific,
                          "Append an uncited solo author with this many papers (repeatable)");
    synth_cmd->add_option("--plant-repeated", synth_opt.plant_repeated,
                          "Append this many uncited papers by one repeated team (repeatable)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (validate_cmd->parsed()) {
            return cmd_validate(in, out, err);
        }
        if (score_cmd->parsed()) {
            return cmd_score(in, eng, score_opt, out, err);
        }
        if (compare_cmd->parsed()) {
            return cmd_compare(in, eng, compare_opt, out, err);
        }
        if (gini_cmd->parsed()) {
            return cmd_gini(in, eng, gini_opt, out, err);
        }
        if (synth_cmd->parsed()) {
            return cmd_synth(synth_opt, err);
        }
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return data_error;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return data_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

}  // namespace citerank::cli
