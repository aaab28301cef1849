#include "citerank/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace citerank {

namespace {

// std::*_distribution output is implementation-defined; draw from the engine's
// raw bits instead so a seed means the same corpus on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::size_t below(std::size_t bound)
    {
        auto k = static_cast<std::size_t>(uniform() * static_cast<double>(bound));
        return std::min(k, bound - 1);
    }

private:
    std::mt19937_64 engine_;
};

std::size_t team_size(const AuthorsPerPaper& spec, Rng& rng)
{
    if (spec.kind == AuthorsPerPaper::Kind::fixed) {
        return static_cast<std::size_t>(std::max(1.0, std::round(spec.mean)));
    }
    if (spec.mean <= 1.0) {
        return 1;
    }
    // 1 + number of failures before the first success, success probability 1/mean.
    const double p = 1.0 / spec.mean;
    const double u = 1.0 - rng.uniform();  // (0, 1]
    return 1 + static_cast<std::size_t>(std::floor(std::log(u) / std::log1p(-p)));
}

std::string unique_key(const std::string& stem, std::unordered_set<std::string>& taken)
{
    std::string key = stem;
    while (!taken.insert(key).second) {
        key += '_';
    }
    return key;
}

std::unordered_set<std::string> key_set(const std::vector<std::string>& keys)
{
    return {keys.begin(), keys.end()};
}

/* Shuffled multiset of author ids, one per authorship slot.
 *
 * Author r (0-based rank) receives one guaranteed slot plus a share of the
 * remaining slots proportional to (r + 1)^(-1 / (skew - 1)), apportioned by
 * largest remainder. With fewer slots than authors the guarantee is dropped
 * and the whole budget is apportioned by weight.
 */
std::vector<Index> author_slots(const SynthConfig& cfg, std::size_t total, Rng& rng)
{
    const std::size_t n = cfg.n_authors;
    const double exponent = 1.0 / (cfg.author_productivity_skew - 1.0);
    std::vector<double> weight(n);
    double weight_sum = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        weight[r] = std::pow(static_cast<double>(r + 1), -exponent);
        weight_sum += weight[r];
    }

    const std::size_t base = total >= n ? 1 : 0;
    const std::size_t budget = total - base * n;
    std::vector<std::size_t> quota(n, base);
    std::vector<std::pair<double, std::size_t>> remainders(n);
    std::size_t assigned = 0;
    for (std::size_t r = 0; r < n; ++r) {
        const double exact = static_cast<double>(budget) * weight[r] / weight_sum;
        const auto whole = static_cast<std::size_t>(std::floor(exact));
        quota[r] += whole;
        assigned += whole;
        remainders[r] = {exact - static_cast<double>(whole), r};
    }
    std::stable_sort(remainders.begin(), remainders.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t k = 0; assigned < budget; ++k, ++assigned) {
        ++quota[remainders[k % n].second];
    }

    std::vector<Index> slots;
    slots.reserve(total);
    for (std::size_t r = 0; r < n; ++r) {
        slots.insert(slots.end(), quota[r], r);
    }
    for (std::size_t i = slots.size(); i > 1; --i) {
        std::swap(slots[i - 1], slots[rng.below(i)]);
    }
    return slots;
}


/* slots[next] repeats someone in the current team (slots[team_begin, next)).
 * Swap it with an earlier slot s whose author is new to the team, provided
 * the repeated author is not already on s's paper. authorship[k] records the
 * paper of slots[k] for every k < team_begin, with each paper's slots
 * contiguous.
 */
bool trade_back(std::vector<Index>& slots, std::vector<AuthorshipEdge>& authorship,
                std::size_t team_begin, std::size_t next)
{
    auto in_range = [&](Index a, std::size_t lo, std::size_t hi) {
        return std::find(slots.begin() + static_cast<std::ptrdiff_t>(lo),
                         slots.begin() + static_cast<std::ptrdiff_t>(hi), a)
               != slots.begin() + static_cast<std::ptrdiff_t>(hi);
    };
    const Index repeated = slots[next];
    for (std::size_t s = team_begin; s-- > 0;) {
        if (in_range(slots[s], team_begin, next)) {
            continue;
        }
        const Index paper = authorship[s].second;
        std::size_t lo = s;
        while (lo > 0 && authorship[lo - 1].second == paper) {
            --lo;
        }
        std::size_t hi = s + 1;
        while (hi < team_begin && authorship[hi].second == paper) {
            ++hi;
        }
        if (in_range(repeated, lo, hi)) {
            continue;
        }
        std::swap(slots[s], slots[next]);
        authorship[s].first = slots[s];
        return true;
    }
    return false;
}

}  // namespace

void SynthConfig::validate() const
{
    if (n_papers < 1 || n_authors < 1) {
        throw std::invalid_argument("synth: n_papers and n_authors must be at least 1");
    }
    if (!(citations_per_paper >= 0.0) || !std::isfinite(citations_per_paper)) {
        throw std::invalid_argument("synth: citations_per_paper must be a finite number >= 0");
    }
    if (citations_per_paper >= static_cast<double>(n_papers) && citations_per_paper > 0.0) {
        throw std::invalid_argument("synth: citations_per_paper must be below n_papers");
    }
    if (!(attachment_offset > 0.0) || !std::isfinite(attachment_offset)) {
        throw std::invalid_argument("synth: attachment_offset must be positive");
    }
    if (!(authors_per_paper.mean >= 1.0) || !std::isfinite(authors_per_paper.mean)) {
        throw std::invalid_argument("synth: authors_per_paper mean must be >= 1");
    }
    if (!(author_productivity_skew > 1.0) || !std::isfinite(author_productivity_skew)) {
        throw std::invalid_argument("synth: author_productivity_skew must be > 1");
    }
    for (const auto& p : planted) {
        if (p.size < 1) {
            throw std::invalid_argument("synth: planted pathology size must be at least 1");
        }
    }
}

Corpus generate(const SynthConfig& cfg)
{
    cfg.validate();
    Rng rng(cfg.seed);

    // Team sizes first, so the total number of author slots is known.
    std::vector<std::size_t> sizes(cfg.n_papers);
    for (auto& size : sizes) {
        size = std::min(team_size(cfg.authors_per_paper, rng), cfg.n_authors);
    }
    auto slots = author_slots(cfg, std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}), rng);

    const double whole = std::floor(cfg.citations_per_paper);
    const double frac = cfg.citations_per_paper - whole;

    std::vector<AuthorshipEdge> authorship;
    std::vector<CitationEdge> citations;
    std::vector<Index> cited_pool;  // target of every citation so far: samples by in-degree
    std::vector<Index> refs;

    std::size_t next_slot = 0;
    for (std::size_t t = 0; t < cfg.n_papers; ++t) {
        const std::size_t team_begin = next_slot;
        for (std::size_t k = 0; k < sizes[t]; ++k) {
            // Swap a repeated author for the next later slot holding someone new.
            auto in_team = [&](Index a) {
                return std::find(slots.begin() + static_cast<std::ptrdiff_t>(team_begin),
                                 slots.begin() + static_cast<std::ptrdiff_t>(next_slot), a)
                       != slots.begin() + static_cast<std::ptrdiff_t>(next_slot);
            };
            std::size_t pick = next_slot;
            while (pick < slots.size() && in_team(slots[pick])) {
                ++pick;
            }
            if (pick == slots.size()) {
                // Only repeats left: trade one with an earlier paper instead.
                if (!trade_back(slots, authorship, team_begin, next_slot)) {
                    break;  // nothing to trade: the team stays smaller
                }
                pick = next_slot;
            }
            std::swap(slots[next_slot], slots[pick]);
            authorship.emplace_back(slots[next_slot], t);
            ++next_slot;
        }

        auto n_refs = static_cast<std::size_t>(whole) + (rng.uniform() < frac ? 1 : 0);
        n_refs = std::min(n_refs, t);
        refs.clear();
        // Target weight is in-degree + offset: with probability E / (E + offset * t)
        // copy the target of a uniformly chosen existing citation, else pick uniformly.
        const double degree_mass = static_cast<double>(cited_pool.size());
        const double total_mass = degree_mass + cfg.attachment_offset * static_cast<double>(t);
        std::size_t attempts = 0;
        while (refs.size() < n_refs) {
            Index target;
            if (attempts++ > 64 * n_refs + 256) {
                // Dense request on a tiny prefix: fall back to the next unused paper.
                target = rng.below(t);
                while (std::find(refs.begin(), refs.end(), target) != refs.end()) {
                    target = (target + 1) % t;
                }
            } else if (rng.uniform() * total_mass < degree_mass) {
                target = cited_pool[rng.below(cited_pool.size())];
            } else {
                target = rng.below(t);
            }
            if (std::find(refs.begin(), refs.end(), target) == refs.end()) {
                refs.push_back(target);
            }
        }
        for (Index target : refs) {
            citations.emplace_back(t, target);
            cited_pool.push_back(target);
        }
    }

    // Drop authors that were never drawn, keeping rank order.
    std::vector<Index> relabel(cfg.n_authors, static_cast<Index>(-1));
    for (const auto& [a, p] : authorship) {
        relabel[a] = 0;
    }
    Corpus corpus;
    for (std::size_t r = 0; r < cfg.n_authors; ++r) {
        if (relabel[r] == 0) {
            relabel[r] = corpus.authors.size();
            corpus.authors.push_back("a" + std::to_string(r));
        }
    }
    corpus.papers.reserve(cfg.n_papers);
    for (std::size_t t = 0; t < cfg.n_papers; ++t) {
        corpus.papers.push_back("p" + std::to_string(t));
    }
    corpus.authorship.reserve(authorship.size());
    for (const auto& [a, p] : authorship) {
        corpus.authorship.emplace_back(relabel[a], p);
    }
    corpus.citations = std::move(citations);

    for (const auto& p : cfg.planted) {
        switch (p.kind) {
        case PlantedPathology::Kind::prolific_uncited_solo_author:
            corpus = plant_prolific_uncited_author(std::move(corpus), p.size);
            break;
        case PlantedPathology::Kind::repeated_author_list:
            corpus = plant_repeated_author_list(std::move(corpus), p.size);
            break;
        }
    }
    return corpus;
}

Corpus plant_prolific_uncited_author(Corpus corpus, std::size_t quota)
{
    if (quota < 1) {
        throw std::invalid_argument("plant_prolific_uncited_author: quota must be at least 1");
    }
    auto author_keys = key_set(corpus.authors);
    auto paper_keys = key_set(corpus.papers);

    const Index author = corpus.authors.size();
    corpus.authors.push_back(unique_key("prolific" + std::to_string(author), author_keys));
    for (std::size_t k = 0; k < quota; ++k) {
        const Index paper = corpus.papers.size();
        corpus.papers.push_back(unique_key("prolific" + std::to_string(author) + "_p"
                                               + std::to_string(k),
                                           paper_keys));
        corpus.authorship.emplace_back(author, paper);
    }
    if (!corpus.metadata.empty()) {
        corpus.metadata.resize(corpus.papers.size());
    }
    return corpus;
}

Corpus plant_repeated_author_list(Corpus corpus, std::size_t block_size)
{
    if (block_size < 1) {
        throw std::invalid_argument("plant_repeated_author_list: block size must be at least 1");
    }
    auto author_keys = key_set(corpus.authors);
    auto paper_keys = key_set(corpus.papers);

    const Index first = corpus.authors.size();
    const std::string stem = "team" + std::to_string(first);
    corpus.authors.push_back(unique_key(stem + "_a", author_keys));
    corpus.authors.push_back(unique_key(stem + "_b", author_keys));
    for (std::size_t k = 0; k < block_size; ++k) {
        const Index paper = corpus.papers.size();
        corpus.papers.push_back(unique_key(stem + "_p" + std::to_string(k), paper_keys));
        corpus.authorship.emplace_back(first, paper);
        corpus.authorship.emplace_back(first + 1, paper);
    }
    if (!corpus.metadata.empty()) {
        corpus.metadata.resize(corpus.papers.size());
    }
    return corpus;
}

}  // namespace citerank
