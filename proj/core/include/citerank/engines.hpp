#pragma once

/*
 * Coupled author/paper scoring by power iteration.
 *
 * CITEX iterates   x <- W (I + C^T) M^T x   and   y <- (I + C^T) M^T W y
 * independently. CAPS iterates x <- W C^T W^T x and derives the paper scores
 * once from the converged author scores, y = C^T W^T x.
 *
 * Every iterate is L1-normalized, so the iteration is the ordinary power
 * method regardless of the operator's spectral radius. Iteration starts from
 * the uniform vector and stops when the L1 distance between successive
 * normalized iterates drops below epsilon.
 */

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "citerank/bibgraph.hpp"

namespace citerank {

struct IterationConfig {
    double epsilon = 1e-9;
    std::size_t max_iterations = 1000;

    /// Throws std::invalid_argument unless epsilon > 0 and max_iterations >= 1.
    void validate() const;
};

enum class EntityClass { author, paper };

std::string_view to_string(EntityClass entity);

struct ScoreVector {
    EntityClass entity = EntityClass::author;
    std::vector<double> values;
    /// Set when values were L1-normalized (false for an all-zero result).
    bool normalized = false;

    bool all_zero() const;
};

struct ConvergenceReport {
    std::size_t iterations = 0;
    double final_residual = 0.0;
    bool converged = false;
    /// The iterate collapsed to exactly zero; zero is a fixed point, so converged is also set.
    bool all_zero = false;
};

/// Matrix-free nonnegative operator mapping R^input_dim to R^output_dim.
class LinearOperator {
public:
    using Apply = std::function<std::vector<double>(std::span<const double>)>;

    LinearOperator(std::size_t input_dim, std::size_t output_dim, Apply apply);

    static LinearOperator identity(std::size_t dim);
    static LinearOperator zero(std::size_t dim);
    /// Wrap a sparse matrix; the matrix must outlive the operator.
    static LinearOperator from_matrix(const SparseMatrix& A);

    std::size_t input_dim() const noexcept { return input_dim_; }
    std::size_t output_dim() const noexcept { return output_dim_; }

    /// Throws DimensionError when v.size() != input_dim().
    std::vector<double> apply(std::span<const double> v) const;

private:
    std::size_t input_dim_;
    std::size_t output_dim_;
    Apply apply_;
};

// Operators over a BibMatrices instance, which must outlive them.

/// P = W (I + C^T) M^T, m x m.
LinearOperator citex_author_operator(const BibMatrices& mats);
/// Q = (I + C^T) M^T W, n x n.
LinearOperator citex_paper_operator(const BibMatrices& mats);
/// W C^T W^T, m x m.
LinearOperator caps_author_operator(const BibMatrices& mats);

struct PowerIteration {
    std::vector<double> values;
    ConvergenceReport report;
};

/** Normalized power iteration from the uniform start vector.
 *
 * Each step applies the operator and L1-normalizes. Runs until the L1 step
 * size is below cfg.epsilon or cfg.max_iterations steps have been taken,
 * whichever comes first; on the latter the last iterate is returned with
 * converged = false. If an iterate is exactly zero the zero vector is
 * returned with all_zero set. dim = 0 yields an empty, all-zero result.
 */
PowerIteration power_iterate(const LinearOperator& op, std::size_t dim,
                             const IterationConfig& cfg = {});

/// L1 distance between normalize(op(v)) and v, or |v|_1 when op(v) is zero.
/// Throws std::invalid_argument for a zero vector.
double fixed_point_residual(const LinearOperator& op, std::span<const double> v);

struct CitexResult {
    ScoreVector x;
    ScoreVector y;
    ConvergenceReport x_report;
    ConvergenceReport y_report;
};

struct CapsResult {
    ScoreVector x;
    ScoreVector y;
    ConvergenceReport x_report;
};

CitexResult citex_scores(const BibMatrices& mats, const IterationConfig& cfg = {});
CapsResult caps_scores(const BibMatrices& mats, const IterationConfig& cfg = {});

enum class Method { citex, caps };

struct OracleResult {
    ScoreVector x;
    ScoreVector y;
    ConvergenceReport x_report;
    /// Equal to x_report for CAPS, whose paper scores are a single post-pass.
    ConvergenceReport y_report;
};

inline constexpr std::size_t dense_oracle_max_dim = 500;

/** Reference implementation on fully materialized dense matrices with naive products.
 *
 * Same contract as citex_scores / caps_scores. Intended for tests and for
 * generating fixtures; throws std::length_error when m or n exceeds
 * dense_oracle_max_dim.
 */
OracleResult dense_oracle_scores(const BibMatrices& mats, Method method,
                                 const IterationConfig& cfg = {});

}  // namespace citerank
