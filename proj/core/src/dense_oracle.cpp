// Dense brute-force reference for the CITEX and CAPS engines. Deliberately
// shares no code with the sparse path beyond the input matrices: operators are
// materialized as full products and iterated with their own loop.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "citerank/engines.hpp"

namespace citerank {

namespace {

struct Dense {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Dense(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

Dense to_dense(const SparseMatrix& A)
{
    Dense out(A.rows(), A.cols());
    for (const auto& t : A.to_triplets()) {
        out(t.row, t.col) = t.value;
    }
    return out;
}

Dense transposed(const Dense& A)
{
    Dense out(A.cols, A.rows);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) {
            out(j, i) = A(i, j);
        }
    }
    return out;
}

Dense product(const Dense& A, const Dense& B)
{
    Dense out(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < B.cols; ++j) {
            double sum = 0.0;
            for (std::size_t p = 0; p < A.cols; ++p) {
                sum += A(i, p) * B(p, j);
            }
            out(i, j) = sum;
        }
    }
    return out;
}

Dense identity_plus(const Dense& A)
{
    Dense out = A;
    for (std::size_t i = 0; i < A.rows; ++i) {
        out(i, i) += 1.0;
    }
    return out;
}

std::vector<double> dense_apply(const Dense& A, const std::vector<double>& v)
{
    std::vector<double> out(A.rows, 0.0);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) {
            out[i] += A(i, j) * v[j];
        }
    }
    return out;
}

double total(const std::vector<double>& v)
{
    double s = 0.0;
    for (double e : v) {
        s += e;
    }
    return s;
}

struct Iterated {
    std::vector<double> v;
    ConvergenceReport report;
};

Iterated iterate(const Dense& op, const IterationConfig& cfg)
{
    const std::size_t dim = op.rows;
    Iterated out;
    if (dim == 0) {
        out.report = {0, 0.0, true, true};
        return out;
    }
    std::vector<double> v(dim, 1.0 / static_cast<double>(dim));
    double residual = 0.0;
    for (std::size_t k = 1; k <= cfg.max_iterations; ++k) {
        auto w = dense_apply(op, v);
        const double s = total(w);  // entries are nonnegative
        if (s == 0.0) {
            out.v.assign(dim, 0.0);
            out.report = {k, 0.0, true, true};
            return out;
        }
        residual = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            w[i] /= s;
            residual += std::abs(w[i] - v[i]);
        }
        v = std::move(w);
        if (residual < cfg.epsilon) {
            out.v = std::move(v);
            out.report = {k, residual, true, false};
            return out;
        }
    }
    out.v = std::move(v);
    out.report = {cfg.max_iterations, residual, false, false};
    return out;
}

}  // namespace

OracleResult dense_oracle_scores(const BibMatrices& mats, Method method, const IterationConfig& cfg)
{
    cfg.validate();
    if (mats.m > dense_oracle_max_dim || mats.n > dense_oracle_max_dim) {
        throw std::length_error("dense oracle limited to " + std::to_string(dense_oracle_max_dim)
                                + " authors and papers");
    }
    const Dense M = to_dense(mats.M);
    const Dense W = to_dense(mats.W);
    const Dense C = to_dense(mats.C);
    const Dense Mt = transposed(M);
    const Dense Wt = transposed(W);
    const Dense Ct = transposed(C);

    OracleResult out;
    if (method == Method::citex) {
        const Dense I_Ct = identity_plus(Ct);
        const Dense P = product(product(W, I_Ct), Mt);
        const Dense Q = product(product(I_Ct, Mt), W);
        auto x = iterate(P, cfg);
        auto y = iterate(Q, cfg);
        out.x = {EntityClass::author, std::move(x.v), !x.report.all_zero};
        out.y = {EntityClass::paper, std::move(y.v), !y.report.all_zero};
        out.x_report = x.report;
        out.y_report = y.report;
        return out;
    }

    const Dense CtWt = product(Ct, Wt);
    const Dense A = product(W, CtWt);
    auto x = iterate(A, cfg);
    std::vector<double> y = x.v.empty() ? std::vector<double>(mats.n, 0.0) : dense_apply(CtWt, x.v);
    const double s = total(y);
    if (s > 0.0) {
        for (double& e : y) {
            e /= s;
        }
    }
    out.x = {EntityClass::author, std::move(x.v), !x.report.all_zero};
    out.y = {EntityClass::paper, std::move(y), s > 0.0};
    out.x_report = x.report;
    out.y_report = x.report;
    return out;
}

}  // namespace citerank
