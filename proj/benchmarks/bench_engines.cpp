#include <benchmark/benchmark.h>

#include <map>

#include "citerank/citerank.hpp"

using namespace citerank;

namespace {

const BibMatrices& corpus(std::size_t papers)
{
    static std::map<std::size_t, BibMatrices> cache;
    auto it = cache.find(papers);
    if (it == cache.end()) {
        SynthConfig cfg;
        cfg.n_papers = papers;
        cfg.n_authors = papers / 2;
        cfg.author_productivity_skew = 3.0;
        cfg.authors_per_paper.mean = 1.5;
        it = cache.emplace(papers, build_matrices(generate(cfg))).first;
    }
    return it->second;
}

void BM_matvec(benchmark::State& state)
{
    const auto& mats = corpus(static_cast<std::size_t>(state.range(0)));
    std::vector<double> v(mats.n, 1.0 / static_cast<double>(mats.n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(matvec(mats.C, v));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(mats.C.nnz()));
}

void BM_matvec_transpose(benchmark::State& state)
{
    const auto& mats = corpus(static_cast<std::size_t>(state.range(0)));
    std::vector<double> v(mats.n, 1.0 / static_cast<double>(mats.n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(matvec_transpose(mats.C, v));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(mats.C.nnz()));
}

void BM_build(benchmark::State& state)
{
    SynthConfig cfg;
    cfg.n_papers = static_cast<std::size_t>(state.range(0));
    cfg.n_authors = cfg.n_papers / 2;
    const auto c = generate(cfg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_matrices(c));
    }
}

void BM_citex(benchmark::State& state)
{
    const auto& mats = corpus(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(citex_scores(mats));
    }
}

void BM_caps(benchmark::State& state)
{
    const auto& mats = corpus(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(caps_scores(mats));
    }
}

}  // namespace

BENCHMARK(BM_matvec)->Arg(10000)->Arg(100000);
BENCHMARK(BM_matvec_transpose)->Arg(10000)->Arg(100000);
BENCHMARK(BM_build)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_citex)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_caps)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
