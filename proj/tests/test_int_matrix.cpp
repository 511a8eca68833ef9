#include <random>

#include "doctest.h"
#include "toric/int_matrix.hpp"

using namespace toric;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix M(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) M.at(i, j) = d(rng);
    return M;
}

bool is_unimodular_pair(const IntMatrix& U, const IntMatrix& Uinv) {
    return U * Uinv == IntMatrix::identity(U.rows()) && Uinv * U == IntMatrix::identity(U.rows());
}

}  // namespace

TEST_CASE("smith normal form on random matrices") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + trial % 5, cols = 1 + (trial / 5) % 5;
        IntMatrix M = random_matrix(rng, rows, cols, -9, 9);
        SmithResult snf = smith_normal_form(M);

        CHECK(snf.U * M * snf.V == snf.S);
        CHECK(is_unimodular_pair(snf.U, snf.Uinv));
        CHECK(is_unimodular_pair(snf.V, snf.Vinv));

        // diagonal, nonnegative, divisibility chain, rank
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (i != j) CHECK(snf.S.at(i, j) == 0);
        std::size_t nz = 0;
        for (std::size_t i = 0; i < std::min(rows, cols); ++i) {
            CHECK(snf.S.at(i, i) >= 0);
            if (snf.S.at(i, i) != 0) {
                ++nz;
                if (i > 0 && snf.S.at(i - 1, i - 1) != 0)
                    CHECK(snf.S.at(i, i) % snf.S.at(i - 1, i - 1) == 0);
            } else if (i > 0) {
                CHECK(snf.S.at(i - 1, i - 1) * Int(1) >= 0);
            }
        }
        CHECK(snf.rank == nz);
        CHECK(snf.rank == matrix_rank(M));
    }
}

TEST_CASE("smith normal form: known small example") {
    // diag(2,6,12)-type invariants of [[2,4,4],[-6,6,12],[10,4,16]] are 2, 2, 156
    IntMatrix M = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    SmithResult snf = smith_normal_form(M);
    CHECK(snf.S.at(0, 0) == 2);
    CHECK(snf.S.at(1, 1) == 2);
    CHECK(snf.S.at(2, 2) == 156);
}

TEST_CASE("column hermite form and coset reduction") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 2 + trial % 4, cols = 1 + (trial / 4) % 5;
        IntMatrix M = random_matrix(rng, rows, cols, -7, 7);
        IntMatrix H = column_hermite_form(M);

        // every column of M reduces to zero, reduction is idempotent and a coset invariant
        for (std::size_t j = 0; j < cols; ++j) {
            IntVec red = reduce_by_hermite(H, M.col(j));
            CHECK(vec_is_zero(red));
        }
        IntVec v(rows);
        std::uniform_int_distribution<int> d(-20, 20);
        for (auto& x : v) x = d(rng);
        IntVec rv = reduce_by_hermite(H, v);
        CHECK(reduce_by_hermite(H, rv) == rv);
        for (std::size_t j = 0; j < cols; ++j) {
            IntVec shifted = vec_add(v, vec_scaled(M.col(j), Int(d(rng))));
            CHECK(reduce_by_hermite(H, shifted) == rv);
        }
        // the difference v - rv lies in the column lattice of M
        CHECK(solve_integer(M, vec_sub(v, rv)).has_value());
    }
}

TEST_CASE("solve_integer finds exact solutions and rejects non-solutions") {
    IntMatrix M = IntMatrix::from_rows({{2, 0}, {0, 3}});
    auto sol = solve_integer(M, {Int(4), Int(9)});
    REQUIRE(sol.has_value());
    CHECK(M.mul(*sol) == IntVec{Int(4), Int(9)});
    CHECK_FALSE(solve_integer(M, {Int(3), Int(9)}).has_value());

    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        IntMatrix A = random_matrix(rng, 3, 4, -5, 5);
        IntVec x(4);
        std::uniform_int_distribution<int> d(-6, 6);
        for (auto& e : x) e = d(rng);
        IntVec b = A.mul(x);
        auto s = solve_integer(A, b);
        REQUIRE(s.has_value());
        CHECK(A.mul(*s) == b);
    }
}

TEST_CASE("determinant agrees with cofactor expansion on small matrices") {
    CHECK(determinant(IntMatrix::from_rows({{3}})) == 3);
    CHECK(determinant(IntMatrix::from_rows({{1, 2}, {3, 4}})) == -2);
    CHECK(determinant(IntMatrix::from_rows({{2, 0, 1}, {1, 1, 0}, {0, 3, 1}})) == 5);
    CHECK(determinant(IntMatrix::identity(4)) == 1);
    CHECK(determinant(IntMatrix::from_rows({{1, 2}, {2, 4}})) == 0);
}
