#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "citerank/csv.hpp"
#include "citerank/errors.hpp"
#include "citerank/io.hpp"
#include "fixtures.hpp"

using namespace citerank;
using fixtures::write_file;

namespace {

struct Files {
    fixtures::TempDir dir{"citerank-io"};
    CorpusFiles files{dir / "authorship.csv", dir / "citations.csv", std::nullopt};

    Files(const std::string& authorship, const std::string& citations)
    {
        write_file(files.authorship_path, authorship);
        write_file(files.citations_path, citations);
    }
};

std::size_t error_line(const CorpusFiles& files)
{
    try {
        load_corpus(files);
    } catch (const DataError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("csv splitting")
{
    CHECK(csv::split_line("a,b", 1) == std::vector<std::string>{"a", "b"});
    CHECK(csv::split_line("\"a,1\",\"say \"\"hi\"\"\"", 1)
          == std::vector<std::string>{"a,1", "say \"hi\""});
    CHECK(csv::split_line("a,", 1) == std::vector<std::string>{"a", ""});
    CHECK_THROWS_AS(csv::split_line("\"open", 3), DataError);
    CHECK_THROWS_AS(csv::split_line("\"a\"b", 3), DataError);
    CHECK_THROWS_AS(csv::split_line("a\"b", 3), DataError);
    for (std::string s : {"plain", "with,comma", "with \"quote\"", " padded "}) {
        CHECK(csv::split_line(csv::escape(s), 1) == std::vector<std::string>{s});
    }
}

TEST_CASE("loading the toy corpus")
{
    Files f(fixtures::toy_authorship_csv, fixtures::toy_citations_csv);
    auto loaded = load_corpus(f.files);
    CHECK(loaded.report.total_anomalies() == 0);
    CHECK(loaded.corpus == fixtures::toy());
    CHECK(build_matrices(loaded.corpus).C == build_matrices(fixtures::toy()).C);
    CHECK(load_corpus(f.files).corpus == loaded.corpus);
}

TEST_CASE("loader tolerates CRLF, BOM and blank lines")
{
    Files f("\xEF\xBB\xBF" "author_key,paper_id\r\na1,p1\r\n\r\na1,p2\r\n",
            "citing_paper_id,cited_paper_id\r\np2,p1\r\n");
    auto loaded = load_corpus(f.files);
    CHECK(loaded.corpus.authors == std::vector<std::string>{"a1"});
    CHECK(loaded.corpus.papers == std::vector<std::string>{"p1", "p2"});
    CHECK(loaded.corpus.citations.size() == 1);
}

TEST_CASE("self-citations load and are reported")
{
    Files f(fixtures::toy_authorship_csv,
            std::string(fixtures::toy_citations_csv) + "p1,p1\n");
    auto loaded = load_corpus(f.files);
    CHECK(loaded.report.self_citations_stripped == 1);
    CHECK(loaded.corpus.citations.size() == 3);
}

TEST_CASE("header-only authorship file")
{
    Files f("author_key,paper_id\n", fixtures::toy_citations_csv);
    auto loaded = load_corpus(f.files);
    CHECK(loaded.corpus.authors.empty());
    CHECK(loaded.corpus.papers.size() == 3);
    CHECK(loaded.report.zero_author_papers == loaded.corpus.papers.size());
}

TEST_CASE("malformed input names the line")
{
    SECTION("wrong field count")
    {
        Files f("author_key,paper_id\na1,p1\na2\n", fixtures::toy_citations_csv);
        CHECK(error_line(f.files) == 3);
    }
    SECTION("empty key")
    {
        Files f(fixtures::toy_authorship_csv, "citing_paper_id,cited_paper_id\np4,\n");
        CHECK(error_line(f.files) == 2);
    }
    SECTION("bad header")
    {
        Files f("author,paper\na1,p1\n", fixtures::toy_citations_csv);
        CHECK(error_line(f.files) == 1);
    }
    SECTION("missing header")
    {
        Files f("", fixtures::toy_citations_csv);
        CHECK_THROWS_AS(load_corpus(f.files), DataError);
    }
    SECTION("duplicate header")
    {
        Files f("author_key,paper_id\na1,p1\nauthor_key,paper_id\na2,p2\n",
                fixtures::toy_citations_csv);
        CHECK(error_line(f.files) == 3);
    }
    SECTION("bad quoting")
    {
        Files f("author_key,paper_id\na1,p1\n\"a2,p2\n", fixtures::toy_citations_csv);
        CHECK(error_line(f.files) == 3);
    }
    SECTION("missing file")
    {
        CorpusFiles files{"/nonexistent/authorship.csv", "/nonexistent/citations.csv", {}};
        CHECK_THROWS_AS(load_corpus(files), IoError);
    }
}

TEST_CASE("metadata")
{
    Files f(fixtures::toy_authorship_csv, fixtures::toy_citations_csv);
    auto meta = f.dir / "metadata.csv";
    f.files.metadata_path = meta;

    write_file(meta, "paper_id,year,venue,reported_times_cited\np6,2001,\"J, Doc\",12\np9,1999,,0\n");
    auto loaded = load_corpus(f.files);
    REQUIRE(loaded.corpus.has_metadata());
    CHECK(loaded.corpus.papers.size() == 7);
    CHECK(loaded.corpus.metadata[5] == PaperMetadata{2001, "J, Doc", 12});
    CHECK(loaded.corpus.metadata[6] == PaperMetadata{1999, "", 0});
    CHECK_FALSE(loaded.corpus.metadata[0].has_value());
    CHECK(loaded.report.zero_author_papers == 1);

    write_file(meta, "paper_id,year,venue,reported_times_cited\np6,20x1,J,1\n");
    CHECK(error_line(f.files) == 2);
    write_file(meta, "paper_id,year,venue,reported_times_cited\np6,2001,J,-1\n");
    CHECK(error_line(f.files) == 2);
    write_file(meta, "paper_id,year,venue,reported_times_cited\np6,2001,J,1\np6,2002,J,1\n");
    CHECK(error_line(f.files) == 3);
}

TEST_CASE("corpus round trip")
{
    SynthConfig cfg;
    cfg.n_papers = 300;
    cfg.n_authors = 120;
    auto corpus = generate(cfg);
    corpus.metadata.resize(corpus.papers.size());
    corpus.metadata[3] = PaperMetadata{1990, "Quoted \"Venue\", Inc", 4};

    fixtures::TempDir dir("citerank-rt");
    CorpusFiles files{dir / "a.csv", dir / "c.csv", dir / "m.csv"};
    write_corpus(corpus, files);
    auto loaded = load_corpus(files);
    // First-appearance order renumbers papers; compare through keys.
    CHECK(loaded.report.total_anomalies() == validate(corpus).total_anomalies());
    CHECK(loaded.corpus.authorship.size() == corpus.authorship.size());
    CHECK(loaded.corpus.citations.size() == corpus.citations.size());
    std::set<std::pair<std::string, std::string>> want, got;
    for (auto [i, j] : corpus.citations) {
        want.insert({corpus.papers[i], corpus.papers[j]});
    }
    for (auto [i, j] : loaded.corpus.citations) {
        got.insert({loaded.corpus.papers[i], loaded.corpus.papers[j]});
    }
    CHECK(want == got);
    auto it = std::find(loaded.corpus.papers.begin(), loaded.corpus.papers.end(), "p3");
    REQUIRE(it != loaded.corpus.papers.end());
    CHECK(loaded.corpus.metadata[it - loaded.corpus.papers.begin()] == corpus.metadata[3]);
}

TEST_CASE("scores files")
{
    fixtures::TempDir dir("citerank-scores");
    const std::vector<std::string> papers{"p1", "p2", "p3", "p4", "p5", "p6"};
    auto y = citex_scores(build_matrices(fixtures::toy())).y.values;
    auto table = make_rank_table(papers, y);

    write_scores(dir / "y.csv", table);
    const auto text = fixtures::read_file(dir / "y.csv");
    CHECK(text.starts_with("rank,entity,score\n1,p6,0.2857142"));
    CHECK(std::count(text.begin(), text.end(), '\n') == 7);
    CHECK(text == format_scores(table));

    auto back = read_scores(dir / "y.csv");
    REQUIRE(back.entries.size() == table.entries.size());
    for (std::size_t k = 0; k < back.entries.size(); ++k) {
        CHECK(back.entries[k].entity == table.entries[k].entity);
        CHECK(back.entries[k].rank == table.entries[k].rank);
        CHECK(format_score(back.entries[k].score) == format_score(table.entries[k].score));
    }
    write_scores(dir / "again.csv", back);
    CHECK(fixtures::read_file(dir / "again.csv") == text);

    write_scores(dir / "empty.csv", RankTable{});
    CHECK(fixtures::read_file(dir / "empty.csv") == "rank,entity,score\n");

    CHECK_THROWS_AS(write_scores(dir / "missing" / "x.csv", table), IoError);
}
