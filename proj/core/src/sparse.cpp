#include "citerank/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "citerank/errors.hpp"

namespace citerank {

namespace {

void check_value(double v)
{
    if (!std::isfinite(v) || v < 0.0) {
        throw std::invalid_argument("sparse matrix values must be finite and nonnegative, got "
                                    + std::to_string(v));
    }
}

std::string shape_str(Index r, Index c)
{
    return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

SparseMatrix::SparseMatrix() : row_offsets_{0} {}

SparseMatrix::SparseMatrix(Index n_rows, Index n_cols, std::vector<Index> row_offsets,
                           std::vector<Index> col_indices, std::vector<double> values)
    : n_rows_(n_rows),
      n_cols_(n_cols),
      row_offsets_(std::move(row_offsets)),
      col_indices_(std::move(col_indices)),
      values_(std::move(values))
{
}

SparseMatrix SparseMatrix::from_triplets(std::span<const Triplet> entries, Index n_rows,
                                         Index n_cols)
{
    for (const auto& t : entries) {
        if (t.row >= n_rows || t.col >= n_cols) {
            throw std::out_of_range("triplet (" + std::to_string(t.row) + ","
                                    + std::to_string(t.col) + ") outside "
                                    + shape_str(n_rows, n_cols));
        }
        check_value(t.value);
    }

    // Bucket by row, then sort each row by column and merge duplicates.
    std::vector<Index> counts(n_rows + 1, 0);
    for (const auto& t : entries) {
        ++counts[t.row + 1];
    }
    std::partial_sum(counts.begin(), counts.end(), counts.begin());

    std::vector<std::pair<Index, double>> bucketed(entries.size());
    std::vector<Index> next(counts.begin(), counts.end() - 1);
    for (const auto& t : entries) {
        bucketed[next[t.row]++] = {t.col, t.value};
    }

    std::vector<Index> offsets(n_rows + 1, 0);
    std::vector<Index> cols;
    std::vector<double> vals;
    cols.reserve(entries.size());
    vals.reserve(entries.size());

    for (Index i = 0; i < n_rows; ++i) {
        auto first = bucketed.begin() + static_cast<std::ptrdiff_t>(counts[i]);
        auto last = bucketed.begin() + static_cast<std::ptrdiff_t>(counts[i + 1]);
        std::stable_sort(first, last,
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto it = first; it != last;) {
            Index col = it->first;
            double sum = 0.0;
            for (; it != last && it->first == col; ++it) {
                sum += it->second;
            }
            if (sum != 0.0) {
                cols.push_back(col);
                vals.push_back(sum);
            }
        }
        offsets[i + 1] = cols.size();
    }
    return SparseMatrix(n_rows, n_cols, std::move(offsets), std::move(cols), std::move(vals));
}

SparseMatrix SparseMatrix::identity(Index n)
{
    std::vector<Index> offsets(n + 1);
    std::iota(offsets.begin(), offsets.end(), Index{0});
    std::vector<Index> cols(n);
    std::iota(cols.begin(), cols.end(), Index{0});
    return SparseMatrix(n, n, std::move(offsets), std::move(cols), std::vector<double>(n, 1.0));
}

SparseMatrix SparseMatrix::from_csr(Index n_rows, Index n_cols, std::vector<Index> row_offsets,
                                    std::vector<Index> col_indices, std::vector<double> values)
{
    if (row_offsets.size() != n_rows + 1 || row_offsets.front() != 0
        || row_offsets.back() != values.size() || col_indices.size() != values.size()) {
        throw std::invalid_argument("inconsistent CSR array lengths");
    }
    for (Index i = 0; i < n_rows; ++i) {
        if (row_offsets[i] > row_offsets[i + 1]) {
            throw std::invalid_argument("row offsets must be nondecreasing");
        }
        for (Index k = row_offsets[i]; k < row_offsets[i + 1]; ++k) {
            if (col_indices[k] >= n_cols) {
                throw std::invalid_argument("column index out of range");
            }
            if (k > row_offsets[i] && col_indices[k] <= col_indices[k - 1]) {
                throw std::invalid_argument("column indices must be strictly increasing per row");
            }
            check_value(values[k]);
            if (values[k] == 0.0) {
                throw std::invalid_argument("explicit zeros are not stored");
            }
        }
    }
    return SparseMatrix(n_rows, n_cols, std::move(row_offsets), std::move(col_indices),
                        std::move(values));
}

std::span<const Index> SparseMatrix::row_cols(Index row) const
{
    return std::span<const Index>(col_indices_).subspan(row_offsets_[row],
                                                        row_offsets_[row + 1] - row_offsets_[row]);
}

std::span<const double> SparseMatrix::row_values(Index row) const
{
    return std::span<const double>(values_).subspan(row_offsets_[row],
                                                    row_offsets_[row + 1] - row_offsets_[row]);
}

double SparseMatrix::at(Index row, Index col) const
{
    if (row >= n_rows_ || col >= n_cols_) {
        throw std::out_of_range("index outside " + shape_str(n_rows_, n_cols_));
    }
    auto cols = row_cols(row);
    auto it = std::lower_bound(cols.begin(), cols.end(), col);
    if (it == cols.end() || *it != col) {
        return 0.0;
    }
    return values_[row_offsets_[row] + static_cast<Index>(it - cols.begin())];
}

std::vector<Triplet> SparseMatrix::to_triplets() const
{
    std::vector<Triplet> out;
    out.reserve(nnz());
    for (Index i = 0; i < n_rows_; ++i) {
        for (Index k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k) {
            out.push_back({i, col_indices_[k], values_[k]});
        }
    }
    return out;
}

std::vector<double> matvec(const SparseMatrix& A, std::span<const double> x)
{
    if (x.size() != A.cols()) {
        throw DimensionError("matvec: matrix is " + shape_str(A.rows(), A.cols())
                             + " but vector has length " + std::to_string(x.size()));
    }
    const auto offsets = A.row_offsets();
    const auto cols = A.col_indices();
    const auto vals = A.values();

    std::vector<double> y(A.rows(), 0.0);
    for (Index i = 0; i < A.rows(); ++i) {
        double sum = 0.0;
        for (Index k = offsets[i]; k < offsets[i + 1]; ++k) {
            sum += vals[k] * x[cols[k]];
        }
        y[i] = sum;
    }
    return y;
}

std::vector<double> matvec_transpose(const SparseMatrix& A, std::span<const double> x)
{
    if (x.size() != A.rows()) {
        throw DimensionError("matvec_transpose: matrix is " + shape_str(A.rows(), A.cols())
                             + " but vector has length " + std::to_string(x.size()));
    }
    const auto offsets = A.row_offsets();
    const auto cols = A.col_indices();
    const auto vals = A.values();

    std::vector<double> y(A.cols(), 0.0);
    for (Index i = 0; i < A.rows(); ++i) {
        const double xi = x[i];
        if (xi == 0.0) {
            continue;
        }
        for (Index k = offsets[i]; k < offsets[i + 1]; ++k) {
            y[cols[k]] += vals[k] * xi;
        }
    }
    return y;
}

SparseMatrix transpose(const SparseMatrix& A)
{
    const auto offsets = A.row_offsets();
    const auto cols = A.col_indices();
    const auto vals = A.values();

    std::vector<Index> t_offsets(A.cols() + 1, 0);
    for (Index c : cols) {
        ++t_offsets[c + 1];
    }
    std::partial_sum(t_offsets.begin(), t_offsets.end(), t_offsets.begin());

    std::vector<Index> next(t_offsets.begin(), t_offsets.end() - 1);
    std::vector<Index> t_cols(A.nnz());
    std::vector<double> t_vals(A.nnz());
    // Rows are visited in increasing order, so each transposed row comes out sorted.
    for (Index i = 0; i < A.rows(); ++i) {
        for (Index k = offsets[i]; k < offsets[i + 1]; ++k) {
            Index dst = next[cols[k]]++;
            t_cols[dst] = i;
            t_vals[dst] = vals[k];
        }
    }
    return SparseMatrix::from_csr(A.cols(), A.rows(), std::move(t_offsets), std::move(t_cols),
                                  std::move(t_vals));
}

SparseMatrix column_normalize(const SparseMatrix& A)
{
    const auto sums = col_sums(A);
    std::vector<double> vals(A.values().begin(), A.values().end());
    const auto cols = A.col_indices();
    for (Index k = 0; k < vals.size(); ++k) {
        vals[k] /= sums[cols[k]];
    }
    return SparseMatrix::from_csr(
        A.rows(), A.cols(), std::vector<Index>(A.row_offsets().begin(), A.row_offsets().end()),
        std::vector<Index>(cols.begin(), cols.end()), std::move(vals));
}

std::vector<double> row_sums(const SparseMatrix& A)
{
    std::vector<double> out(A.rows(), 0.0);
    for (Index i = 0; i < A.rows(); ++i) {
        for (double v : A.row_values(i)) {
            out[i] += v;
        }
    }
    return out;
}

std::vector<double> col_sums(const SparseMatrix& A)
{
    std::vector<double> out(A.cols(), 0.0);
    const auto cols = A.col_indices();
    const auto vals = A.values();
    for (Index k = 0; k < A.nnz(); ++k) {
        out[cols[k]] += vals[k];
    }
    return out;
}

SparseMatrix multiply(const SparseMatrix& A, const SparseMatrix& B)
{
    if (A.cols() != B.rows()) {
        throw DimensionError("multiply: " + shape_str(A.rows(), A.cols()) + " * "
                             + shape_str(B.rows(), B.cols()));
    }
    constexpr Index unset = static_cast<Index>(-1);

    std::vector<Index> offsets(A.rows() + 1, 0);
    std::vector<Index> cols;
    std::vector<double> vals;

    std::vector<double> accum(B.cols(), 0.0);
    std::vector<Index> marker(B.cols(), unset);
    std::vector<Index> touched;

    for (Index i = 0; i < A.rows(); ++i) {
        touched.clear();
        auto a_cols = A.row_cols(i);
        auto a_vals = A.row_values(i);
        for (Index ka = 0; ka < a_cols.size(); ++ka) {
            const Index p = a_cols[ka];
            auto b_cols = B.row_cols(p);
            auto b_vals = B.row_values(p);
            for (Index kb = 0; kb < b_cols.size(); ++kb) {
                const Index j = b_cols[kb];
                if (marker[j] != i) {
                    marker[j] = i;
                    accum[j] = 0.0;
                    touched.push_back(j);
                }
                accum[j] += a_vals[ka] * b_vals[kb];
            }
        }
        std::sort(touched.begin(), touched.end());
        for (Index j : touched) {
            if (accum[j] != 0.0) {
                cols.push_back(j);
                vals.push_back(accum[j]);
            }
        }
        offsets[i + 1] = cols.size();
    }
    return SparseMatrix::from_csr(A.rows(), B.cols(), std::move(offsets), std::move(cols),
                                  std::move(vals));
}

}  // namespace citerank
