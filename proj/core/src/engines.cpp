#include "citerank/engines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "citerank/errors.hpp"

namespace citerank {

namespace {

double l1_norm(std::span<const double> v)
{
    double sum = 0.0;
    for (double e : v) {
        sum += std::abs(e);
    }
    return sum;
}

double l1_distance(std::span<const double> a, std::span<const double> b)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += std::abs(a[i] - b[i]);
    }
    return sum;
}

bool is_zero(std::span<const double> v)
{
    return std::all_of(v.begin(), v.end(), [](double e) { return e == 0.0; });
}

// Returns false (and leaves v untouched) when v is all zero.
bool normalize_l1(std::vector<double>& v)
{
    const double norm = l1_norm(v);
    if (norm == 0.0) {
        return false;
    }
    for (double& e : v) {
        e /= norm;
    }
    return true;
}

// v + C^T v, without materializing I + C^T.
std::vector<double> add_cited(const SparseMatrix& C, std::vector<double> v)
{
    const auto cited = matvec_transpose(C, v);
    for (std::size_t j = 0; j < v.size(); ++j) {
        v[j] += cited[j];
    }
    return v;
}

ScoreVector make_scores(EntityClass entity, std::vector<double> values)
{
    ScoreVector out{entity, std::move(values), false};
    out.normalized = normalize_l1(out.values);
    return out;
}

}  // namespace

void IterationConfig::validate() const
{
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw std::invalid_argument("epsilon must be a positive finite number");
    }
    if (max_iterations < 1) {
        throw std::invalid_argument("max_iterations must be at least 1");
    }
}

std::string_view to_string(EntityClass entity)
{
    return entity == EntityClass::author ? "author" : "paper";
}

bool ScoreVector::all_zero() const
{
    return is_zero(values);
}

LinearOperator::LinearOperator(std::size_t input_dim, std::size_t output_dim, Apply apply)
    : input_dim_(input_dim), output_dim_(output_dim), apply_(std::move(apply))
{
}

LinearOperator LinearOperator::identity(std::size_t dim)
{
    return LinearOperator(dim, dim, [](std::span<const double> v) {
        return std::vector<double>(v.begin(), v.end());
    });
}

LinearOperator LinearOperator::zero(std::size_t dim)
{
    return LinearOperator(dim, dim,
                          [dim](std::span<const double>) { return std::vector<double>(dim, 0.0); });
}

LinearOperator LinearOperator::from_matrix(const SparseMatrix& A)
{
    return LinearOperator(A.cols(), A.rows(),
                          [&A](std::span<const double> v) { return matvec(A, v); });
}

std::vector<double> LinearOperator::apply(std::span<const double> v) const
{
    if (v.size() != input_dim_) {
        throw DimensionError("operator expects length " + std::to_string(input_dim_) + ", got "
                             + std::to_string(v.size()));
    }
    auto out = apply_(v);
    if (out.size() != output_dim_) {
        throw DimensionError("operator produced length " + std::to_string(out.size())
                             + ", declared " + std::to_string(output_dim_));
    }
    return out;
}

LinearOperator citex_author_operator(const BibMatrices& mats)
{
    return LinearOperator(mats.m, mats.m, [&mats](std::span<const double> x) {
        auto papers = matvec_transpose(mats.M, x);
        papers = add_cited(mats.C, std::move(papers));
        return matvec(mats.W, papers);
    });
}

LinearOperator citex_paper_operator(const BibMatrices& mats)
{
    return LinearOperator(mats.n, mats.n, [&mats](std::span<const double> y) {
        const auto authors = matvec(mats.W, y);
        return add_cited(mats.C, matvec_transpose(mats.M, authors));
    });
}

LinearOperator caps_author_operator(const BibMatrices& mats)
{
    return LinearOperator(mats.m, mats.m, [&mats](std::span<const double> x) {
        const auto shares = matvec_transpose(mats.W, x);
        const auto cited = matvec_transpose(mats.C, shares);
        return matvec(mats.W, cited);
    });
}

PowerIteration power_iterate(const LinearOperator& op, std::size_t dim, const IterationConfig& cfg)
{
    cfg.validate();
    if (op.input_dim() != dim || op.output_dim() != dim) {
        throw DimensionError("power_iterate: operator is " + std::to_string(op.output_dim()) + "x"
                             + std::to_string(op.input_dim()) + ", expected square of size "
                             + std::to_string(dim));
    }

    PowerIteration out;
    if (dim == 0) {
        out.report = {0, 0.0, true, true};
        return out;
    }

    std::vector<double> current(dim, 1.0 / static_cast<double>(dim));
    double residual = 0.0;
    for (std::size_t k = 1; k <= cfg.max_iterations; ++k) {
        auto next = op.apply(current);
        if (!normalize_l1(next)) {
            out.values.assign(dim, 0.0);
            out.report = {k, 0.0, true, true};
            return out;
        }
        residual = l1_distance(next, current);
        current = std::move(next);
        if (residual < cfg.epsilon) {
            out.values = std::move(current);
            out.report = {k, residual, true, false};
            return out;
        }
    }
    out.values = std::move(current);
    out.report = {cfg.max_iterations, residual, false, false};
    return out;
}

double fixed_point_residual(const LinearOperator& op, std::span<const double> v)
{
    if (is_zero(v)) {
        throw std::invalid_argument("fixed_point_residual: zero vector has no direction");
    }
    auto image = op.apply(v);
    if (!normalize_l1(image)) {
        // Annihilated: no normalized image exists, report the full distance to zero.
        return l1_norm(v);
    }
    return l1_distance(image, v);
}

CitexResult citex_scores(const BibMatrices& mats, const IterationConfig& cfg)
{
    auto x = power_iterate(citex_author_operator(mats), mats.m, cfg);
    auto y = power_iterate(citex_paper_operator(mats), mats.n, cfg);
    return CitexResult{
        ScoreVector{EntityClass::author, std::move(x.values), !x.report.all_zero},
        ScoreVector{EntityClass::paper, std::move(y.values), !y.report.all_zero},
        x.report,
        y.report,
    };
}

CapsResult caps_scores(const BibMatrices& mats, const IterationConfig& cfg)
{
    auto x = power_iterate(caps_author_operator(mats), mats.m, cfg);
    // Paper scores come from the converged author scores in a single pass.
    auto y = matvec_transpose(mats.C, matvec_transpose(mats.W, x.values));
    return CapsResult{
        ScoreVector{EntityClass::author, std::move(x.values), !x.report.all_zero},
        make_scores(EntityClass::paper, std::move(y)),
        x.report,
    };
}

}  // namespace citerank
