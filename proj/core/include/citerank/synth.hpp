#pragma once

/*
 * Deterministic synthetic corpora from a Price-style cumulative advantage
 * model. Papers arrive one at a time; each new paper cites earlier papers
 * with probability proportional to (citations received so far + offset).
 * Author slots are split across authors by a power-law productivity profile
 * and dealt out in shuffled order.
 */

#include <cstdint>
#include <vector>

#include "citerank/bibgraph.hpp"

namespace citerank {

struct AuthorsPerPaper {
    enum class Kind { fixed, geometric };
    Kind kind = Kind::geometric;
    /// Fixed: rounded team size. Geometric: mean of 1 + Geometric, must be >= 1.
    double mean = 2.0;
};

struct PlantedPathology {
    enum class Kind {
        /// One new author with `size` solo papers that neither cite nor are cited.
        prolific_uncited_solo_author,
        /// `size` new uncited papers all written by the same new two-author team.
        repeated_author_list,
    };
    Kind kind = Kind::prolific_uncited_solo_author;
    std::size_t size = 1;
};

struct SynthConfig {
    std::size_t n_papers = 1000;
    std::size_t n_authors = 500;
    /// Mean references per paper (capped by the number of earlier papers).
    double citations_per_paper = 5.0;
    /// Added to every paper's in-degree when choosing citation targets; > 0.
    double attachment_offset = 1.0;
    AuthorsPerPaper authors_per_paper;
    /** Lotka exponent of author productivity, > 1.
     *
     * The author of rank r (1-based) gets a share of author slots proportional
     * to r^(-1/(skew-1)), so the number of authors with k papers falls off
     * roughly like k^-skew.
     */
    double author_productivity_skew = 2.0;
    std::uint64_t seed = 1;
    std::vector<PlantedPathology> planted;

    /// Throws std::invalid_argument for an infeasible configuration.
    void validate() const;
};

/** Generate a corpus. Same config, same corpus.
 *
 * Every author gets at least one paper when the drawn team sizes leave
 * enough slots; otherwise authors left without a slot are dropped. The
 * result always validates with zero anomalies.
 */
Corpus generate(const SynthConfig& cfg);

/// Append an author with `quota` solo papers outside the citation graph.
Corpus plant_prolific_uncited_author(Corpus corpus, std::size_t quota);

/// Append `block_size` uncited papers sharing one new two-author team.
Corpus plant_repeated_author_list(Corpus corpus, std::size_t block_size);

}  // namespace citerank
