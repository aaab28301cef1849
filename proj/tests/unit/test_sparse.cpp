#include <catch_amalgamated.hpp>

#include <random>
#include <stdexcept>

#include "citerank/sparse.hpp"
#include "fixtures.hpp"

using namespace citerank;
using Catch::Matchers::WithinAbs;

namespace {

SparseMatrix random_matrix(std::mt19937_64& rng, Index rows, Index cols, double density)
{
    std::bernoulli_distribution keep(density);
    std::uniform_real_distribution<double> value(0.0, 5.0);
    std::vector<Triplet> t;
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) {
            if (keep(rng)) {
                t.push_back({i, j, value(rng)});
            }
        }
    }
    return SparseMatrix::from_triplets(t, rows, cols);
}

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_real_distribution<double> value(-3.0, 3.0);
    std::vector<double> v(n);
    for (auto& x : v) {
        x = value(rng);
    }
    return v;
}

bool csr_invariants_hold(const SparseMatrix& A)
{
    const auto off = A.row_offsets();
    if (off.size() != A.rows() + 1 || off[0] != 0 || off.back() != A.nnz()) {
        return false;
    }
    for (Index r = 0; r < A.rows(); ++r) {
        if (off[r] > off[r + 1]) {
            return false;
        }
        const auto cols = A.row_cols(r);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (cols[k] >= A.cols() || (k > 0 && cols[k - 1] >= cols[k])) {
                return false;
            }
        }
    }
    for (double v : A.values()) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("from_triplets builds CSR layouts")
{
    SECTION("empty input")
    {
        auto A = SparseMatrix::from_triplets({}, 2, 2);
        CHECK(A.rows() == 2);
        CHECK(A.cols() == 2);
        CHECK(A.nnz() == 0);
        CHECK(csr_invariants_hold(A));
    }
    SECTION("duplicates are summed")
    {
        std::vector<Triplet> t{{0, 1, 1.0}, {0, 1, 1.0}};
        auto A = SparseMatrix::from_triplets(t, 1, 2);
        CHECK(A.nnz() == 1);
        CHECK(A.at(0, 1) == 2.0);
    }
    SECTION("hand layout")
    {
        std::vector<Triplet> t{{1, 0, 0.5}, {0, 1, 1.0}};
        auto A = SparseMatrix::from_triplets(t, 2, 2);
        CHECK(std::vector<Index>(A.row_offsets().begin(), A.row_offsets().end())
              == std::vector<Index>{0, 1, 2});
        CHECK(std::vector<Index>(A.col_indices().begin(), A.col_indices().end())
              == std::vector<Index>{1, 0});
        CHECK(std::vector<double>(A.values().begin(), A.values().end())
              == std::vector<double>{1.0, 0.5});
    }
    SECTION("explicit zeros are dropped")
    {
        std::vector<Triplet> t{{0, 0, 0.0}, {1, 1, 3.0}};
        auto A = SparseMatrix::from_triplets(t, 2, 2);
        CHECK(A.nnz() == 1);
    }
    SECTION("errors")
    {
        std::vector<Triplet> out_of_range{{2, 0, 1.0}};
        CHECK_THROWS_AS(SparseMatrix::from_triplets(out_of_range, 2, 2), std::out_of_range);
        std::vector<Triplet> negative{{0, 0, -1.0}};
        CHECK_THROWS_AS(SparseMatrix::from_triplets(negative, 2, 2), std::invalid_argument);
        std::vector<Triplet> nan{{0, 0, std::nan("")}};
        CHECK_THROWS_AS(SparseMatrix::from_triplets(nan, 2, 2), std::invalid_argument);
    }
}

TEST_CASE("from_csr rejects broken layouts")
{
    CHECK_NOTHROW(SparseMatrix::from_csr(2, 2, {0, 1, 2}, {1, 0}, {1.0, 0.5}));
    CHECK_THROWS(SparseMatrix::from_csr(2, 2, {0, 1}, {1}, {1.0}));
    CHECK_THROWS(SparseMatrix::from_csr(1, 2, {0, 2}, {1, 0}, {1.0, 1.0}));
    CHECK_THROWS(SparseMatrix::from_csr(1, 2, {0, 1}, {2}, {1.0}));
    CHECK_THROWS(SparseMatrix::from_csr(1, 2, {0, 1}, {0}, {0.0}));
}

TEST_CASE("matvec examples")
{
    const std::vector<double> x{1, 2, 3};
    CHECK(matvec(SparseMatrix::identity(3), x) == x);
    CHECK(matvec(SparseMatrix::from_triplets({}, 2, 2), std::vector<double>{5, 7})
          == std::vector<double>{0, 0});
    CHECK_THROWS(matvec(SparseMatrix::identity(3), std::vector<double>{1, 2}));
    CHECK_THROWS(matvec_transpose(SparseMatrix::identity(3), std::vector<double>{1, 2}));

    auto mats = build_matrices(fixtures::toy());
    CHECK(matvec_transpose(mats.M, std::vector<double>{1, 1, 1})
          == std::vector<double>(6, 1.0));
    CHECK(matvec_transpose(SparseMatrix::from_triplets({}, 2, 3), std::vector<double>{1, 1})
          == std::vector<double>(3, 0.0));
}

TEST_CASE("matvec_transpose agrees with matvec of the transpose")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto A = random_matrix(rng, 20, 30, 0.2);
        auto x = random_vector(rng, 20);
        auto direct = matvec_transpose(A, x);
        auto via = matvec(transpose(A), x);
        REQUIRE(direct.size() == via.size());
        for (std::size_t j = 0; j < direct.size(); ++j) {
            CHECK_THAT(direct[j], WithinAbs(via[j], 1e-12));
        }
    }
}

TEST_CASE("transpose")
{
    CHECK(transpose(SparseMatrix::identity(4)) == SparseMatrix::identity(4));

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        auto A = random_matrix(rng, 1 + trial % 7, 1 + trial % 11, 0.3);
        auto T = transpose(A);
        CHECK(csr_invariants_hold(T));
        CHECK(transpose(T) == A);
    }

    auto C = build_matrices(fixtures::toy()).C;
    auto Ct = transpose(C);
    CHECK(Ct.nnz() == 3);
    CHECK(Ct.at(4, 3) == 1.0);
    CHECK(Ct.at(5, 3) == 1.0);
    CHECK(Ct.at(5, 4) == 1.0);
}

TEST_CASE("column_normalize")
{
    std::vector<Triplet> pair{{0, 0, 1.0}, {1, 0, 1.0}};
    auto W = column_normalize(SparseMatrix::from_triplets(pair, 2, 1));
    CHECK(W.at(0, 0) == 0.5);
    CHECK(W.at(1, 0) == 0.5);

    std::vector<Triplet> three{{0, 0, 1.0}, {1, 0, 1.0}, {2, 0, 1.0}, {0, 1, 1.0}};
    auto W3 = column_normalize(SparseMatrix::from_triplets(three, 3, 3));
    CHECK_THAT(W3.at(2, 0), WithinAbs(1.0 / 3.0, 1e-15));
    CHECK(W3.at(0, 1) == 1.0);
    CHECK(col_sums(W3)[2] == 0.0);

    auto mats = build_matrices(fixtures::toy());
    CHECK(column_normalize(mats.M) == mats.M);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        auto A = random_matrix(rng, 15, 25, 0.2);
        auto N = column_normalize(A);
        auto NN = column_normalize(N);
        for (double s : col_sums(N)) {
            CHECK((s == 0.0 || std::abs(s - 1.0) < 1e-12));
        }
        auto a = N.values();
        auto b = NN.values();
        REQUIRE(a.size() == b.size());
        for (std::size_t k = 0; k < a.size(); ++k) {
            CHECK_THAT(a[k], WithinAbs(b[k], 1e-12));
        }
    }
}

TEST_CASE("axis sums on the toy corpus")
{
    auto mats = build_matrices(fixtures::toy());
    CHECK(row_sums(mats.M) == std::vector<double>{3, 2, 1});
    CHECK(col_sums(mats.C) == std::vector<double>{0, 0, 0, 0, 1, 2});
}

TEST_CASE("triplet round trip and nonnegativity")
{
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 30; ++trial) {
        auto A = random_matrix(rng, 12, 9, 0.25);
        auto t = A.to_triplets();
        CHECK(SparseMatrix::from_triplets(t, A.rows(), A.cols()) == A);

        std::uniform_real_distribution<double> value(0.0, 1.0);
        std::vector<double> x(9);
        for (auto& v : x) {
            v = value(rng);
        }
        for (double y : matvec(A, x)) {
            CHECK(y >= 0.0);
        }
    }
}

TEST_CASE("multiply matches a dense product")
{
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 20; ++trial) {
        auto A = random_matrix(rng, 8, 10, 0.3);
        auto B = random_matrix(rng, 10, 6, 0.3);
        auto P = multiply(A, B);
        CHECK(csr_invariants_hold(P));
        for (Index i = 0; i < 8; ++i) {
            for (Index j = 0; j < 6; ++j) {
                double s = 0.0;
                for (Index k = 0; k < 10; ++k) {
                    s += A.at(i, k) * B.at(k, j);
                }
                CHECK_THAT(P.at(i, j), WithinAbs(s, 1e-12));
            }
        }
    }
    CHECK_THROWS(multiply(SparseMatrix::identity(2), SparseMatrix::identity(3)));
}
