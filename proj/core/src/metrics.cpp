#include "citerank/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace citerank {

namespace {

void require_nonnegative(std::span<const double> values, const char* who)
{
    if (values.empty()) {
        throw std::invalid_argument(std::string(who) + ": empty input");
    }
    double total = 0.0;
    for (double v : values) {
        if (!std::isfinite(v) || v < 0.0) {
            throw std::invalid_argument(std::string(who) + ": values must be finite and >= 0");
        }
        total += v;
    }
    if (total == 0.0) {
        throw std::invalid_argument(std::string(who) + ": undefined for an all-zero input");
    }
}

}  // namespace

double gini(std::span<const double> values)
{
    require_nonnegative(values, "gini");
    std::vector<double> x(values.begin(), values.end());
    std::sort(x.begin(), x.end());
    const std::size_t n = x.size();

    // sum_i (2i - n - 1) x_i, grouped into mirrored pairs (i, n + 1 - i) so that
    // every term is nonnegative and equal values cancel exactly.
    double numer = 0.0;
    for (std::size_t i = 1; i <= n / 2; ++i) {
        const double weight = static_cast<double>(n + 1 - 2 * i);
        numer += weight * (x[n - i] - x[i - 1]);
    }
    const double total = std::accumulate(x.begin(), x.end(), 0.0);
    return numer / (static_cast<double>(n) * total);
}

std::vector<double> average_ranks(std::span<const double> values)
{
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n);
    for (std::size_t start = 0; start < n;) {
        std::size_t end = start + 1;
        while (end < n && values[order[end]] == values[order[start]]) {
            ++end;
        }
        // positions start..end-1 (0-based) share rank mean(start+1 .. end)
        const double rank = 0.5 * static_cast<double>(start + 1 + end);
        for (std::size_t k = start; k < end; ++k) {
            ranks[order[k]] = rank;
        }
        start = end;
    }
    return ranks;
}

double spearman(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("spearman: length mismatch");
    }
    if (a.size() < 2) {
        throw std::invalid_argument("spearman: need at least two observations");
    }
    for (auto side : {a, b}) {
        if (std::any_of(side.begin(), side.end(), [](double v) { return std::isnan(v); })) {
            throw std::invalid_argument("spearman: NaN input");
        }
    }
    const auto ra = average_ranks(a);
    const auto rb = average_ranks(b);
    const double n = static_cast<double>(a.size());
    const double mean = (n + 1.0) / 2.0;  // ranks always average (n+1)/2

    double sab = 0.0;
    double saa = 0.0;
    double sbb = 0.0;
    for (std::size_t i = 0; i < ra.size(); ++i) {
        const double da = ra[i] - mean;
        const double db = rb[i] - mean;
        sab += da * db;
        saa += da * da;
        sbb += db * db;
    }
    if (saa == 0.0 || sbb == 0.0) {
        throw std::domain_error("spearman: undefined for constant input");
    }
    return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

double top_share(std::span<const double> values, double fraction)
{
    require_nonnegative(values, "top_share");
    if (!(fraction > 0.0 && fraction <= 1.0)) {
        throw std::invalid_argument("top_share: fraction must lie in (0, 1]");
    }
    std::vector<double> x(values.begin(), values.end());
    std::sort(x.begin(), x.end(), std::greater<>{});

    const auto n = static_cast<double>(x.size());
    // The small slack keeps e.g. 0.7 * 10 from rounding up to 8.
    auto k = static_cast<std::size_t>(std::ceil(fraction * n - 1e-9));
    k = std::clamp<std::size_t>(k, 1, x.size());

    const double total = std::accumulate(x.begin(), x.end(), 0.0);
    const double top = std::accumulate(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k), 0.0);
    return k == x.size() ? 1.0 : top / total;
}

RankTable make_rank_table(std::span<const std::string> keys, std::span<const double> scores,
                          TiePolicy tie_policy)
{
    if (keys.size() != scores.size()) {
        throw std::invalid_argument("make_rank_table: keys and scores differ in length");
    }
    if (std::any_of(scores.begin(), scores.end(), [](double s) { return std::isnan(s); })) {
        throw std::invalid_argument("make_rank_table: NaN score");
    }

    std::vector<std::size_t> order(keys.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a] != scores[b]) {
            return scores[a] > scores[b];
        }
        if (keys[a] != keys[b]) {
            return keys[a] < keys[b];
        }
        return a < b;
    });

    RankTable table;
    table.tie_policy = tie_policy;
    table.entries.reserve(order.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        table.entries.push_back({keys[order[pos]], scores[order[pos]], static_cast<double>(pos + 1)});
    }

    if (tie_policy == TiePolicy::average) {
        auto& e = table.entries;
        for (std::size_t start = 0; start < e.size();) {
            std::size_t end = start + 1;
            while (end < e.size() && e[end].score == e[start].score) {
                ++end;
            }
            const double rank = 0.5 * static_cast<double>(start + 1 + end);
            for (std::size_t k = start; k < end; ++k) {
                e[k].rank = rank;
            }
            start = end;
        }
    }
    return table;
}

}  // namespace citerank
