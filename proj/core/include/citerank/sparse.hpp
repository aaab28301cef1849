#pragma once

/*
 * Compressed sparse row storage for nonnegative real matrices, plus the
 * handful of kernels the ranking engines are built from: products with a
 * dense vector (direct and transposed), transpose, column normalization,
 * axis sums and a row-wise sparse product.
 */

#include <cstddef>
#include <span>
#include <vector>

namespace citerank {

using Index = std::size_t;

struct Triplet {
    Index row;
    Index col;
    double value;

    friend bool operator==(const Triplet&, const Triplet&) = default;
};

/** Immutable CSR matrix with finite, nonnegative stored values.
 *
 * Within each row the column indices are strictly increasing, and explicit
 * zeros are never stored. Every constructor path establishes these
 * invariants, so all kernels may rely on them.
 */
class SparseMatrix {
public:
    /// 0 x 0 matrix.
    SparseMatrix();

    /** Build from coordinate entries.
     *
     * Duplicate (row, col) entries are summed and explicit zeros dropped.
     * Throws std::out_of_range for an index outside the shape and
     * std::invalid_argument for a negative or non-finite value.
     */
    static SparseMatrix from_triplets(std::span<const Triplet> entries, Index n_rows, Index n_cols);

    static SparseMatrix identity(Index n);

    /// Wrap raw CSR arrays after checking every invariant (throws std::invalid_argument).
    static SparseMatrix from_csr(Index n_rows, Index n_cols, std::vector<Index> row_offsets,
                                 std::vector<Index> col_indices, std::vector<double> values);

    Index rows() const noexcept { return n_rows_; }
    Index cols() const noexcept { return n_cols_; }
    Index nnz() const noexcept { return values_.size(); }

    std::span<const Index> row_offsets() const noexcept { return row_offsets_; }
    std::span<const Index> col_indices() const noexcept { return col_indices_; }
    std::span<const double> values() const noexcept { return values_; }

    std::span<const Index> row_cols(Index row) const;
    std::span<const double> row_values(Index row) const;

    /// Stored value at (row, col), or 0. Binary search within the row.
    double at(Index row, Index col) const;

    /// Row-major list of stored entries; from_triplets(to_triplets()) reproduces *this.
    std::vector<Triplet> to_triplets() const;

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    SparseMatrix(Index n_rows, Index n_cols, std::vector<Index> row_offsets,
                 std::vector<Index> col_indices, std::vector<double> values);

    Index n_rows_ = 0;
    Index n_cols_ = 0;
    std::vector<Index> row_offsets_;
    std::vector<Index> col_indices_;
    std::vector<double> values_;
};

/// result[i] = sum_j A[i,j] x[j]. Throws DimensionError unless x.size() == A.cols().
std::vector<double> matvec(const SparseMatrix& A, std::span<const double> x);

/// result[j] = sum_i A[i,j] x[i], scattered row by row without forming the transpose.
std::vector<double> matvec_transpose(const SparseMatrix& A, std::span<const double> x);

SparseMatrix transpose(const SparseMatrix& A);

/// Scale every column with a nonzero sum so that it sums to 1. Zero columns stay zero.
SparseMatrix column_normalize(const SparseMatrix& A);

std::vector<double> row_sums(const SparseMatrix& A);
std::vector<double> col_sums(const SparseMatrix& A);

/// A * B by row-wise accumulation (Gustavson). Throws DimensionError on inner-size mismatch.
SparseMatrix multiply(const SparseMatrix& A, const SparseMatrix& B);

}  // namespace citerank
