#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace citerank {

/** Gini coefficient of nonnegative values.
 *
 * With x sorted ascending, G = 2 sum_i i x_i / (n sum_i x_i) - (n + 1) / n.
 * Sorting is done internally. Throws std::invalid_argument for empty input,
 * negative or non-finite values, or an all-zero input.
 */
double gini(std::span<const double> values);

/// 1-based ranks, ties sharing the average of the positions they span.
std::vector<double> average_ranks(std::span<const double> values);

/** Spearman rank correlation with average-rank ties.
 *
 * Throws std::invalid_argument on length mismatch or fewer than two values,
 * and std::domain_error when either side is constant.
 */
double spearman(std::span<const double> a, std::span<const double> b);

/// Share of the total held by the largest ceil(fraction * n) values; fraction in (0, 1].
double top_share(std::span<const double> values, double fraction);

enum class TiePolicy { ordinal, average };

struct RankEntry {
    std::string entity;
    double score = 0.0;
    /// Integral under TiePolicy::ordinal; may be fractional under TiePolicy::average.
    double rank = 0.0;

    friend bool operator==(const RankEntry&, const RankEntry&) = default;
};

/// Entries sorted by descending score; equal scores ordered by entity key.
struct RankTable {
    std::vector<RankEntry> entries;
    TiePolicy tie_policy = TiePolicy::ordinal;

    friend bool operator==(const RankTable&, const RankTable&) = default;
};

/// Throws std::invalid_argument on length mismatch or NaN scores.
RankTable make_rank_table(std::span<const std::string> keys, std::span<const double> scores,
                          TiePolicy tie_policy = TiePolicy::ordinal);

}  // namespace citerank
