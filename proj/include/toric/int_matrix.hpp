#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

IntVec to_intvec(const std::vector<long>& v);

// Dense arbitrary-precision integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix column(const IntVec& v);
    static IntMatrix diagonal(const IntVec& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IntVec row(std::size_t i) const;
    IntVec col(std::size_t j) const;
    void set_row(std::size_t i, const IntVec& v);
    void set_col(std::size_t j, const IntVec& v);

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& other) const;
    IntMatrix operator+(const IntMatrix& other) const;
    IntMatrix operator-(const IntMatrix& other) const;
    IntVec mul(const IntVec& v) const;
    IntMatrix scaled(const Int& c) const;

    // Horizontal concatenation [*this | other].
    IntMatrix hcat(const IntMatrix& other) const;
    // Vertical concatenation [*this ; other].
    IntMatrix vcat(const IntMatrix& other) const;
    IntMatrix select_rows(const std::vector<std::size_t>& idx) const;
    IntMatrix select_cols(const std::vector<std::size_t>& idx) const;

    bool operator==(const IntMatrix& other) const = default;
    bool is_zero() const;

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

struct SmithResult {
    IntMatrix U, S, V;        // U*M*V == S, U and V unimodular, S diagonal d1 | d2 | ...
    IntMatrix Uinv, Vinv;     // exact inverses of U and V
    std::size_t rank = 0;     // number of nonzero diagonal entries
};

SmithResult smith_normal_form(const IntMatrix& M);

// Column-style Hermite form of the column lattice of M: columns with strictly
// increasing pivot rows and positive pivots. Spans the same lattice as M's columns.
IntMatrix column_hermite_form(const IntMatrix& M);

// Reduce v modulo the column lattice of H (H as produced by column_hermite_form):
// at every pivot row the result lies in [0, pivot). Unique per coset.
IntVec reduce_by_hermite(const IntMatrix& H, const IntVec& v);

// SNF-reduced particular solution of M*x = b over the integers, if one exists.
std::optional<IntVec> solve_integer(const IntMatrix& M, const IntVec& b);

// Signed determinant (Bareiss fraction-free elimination).
Int determinant(const IntMatrix& M);

std::size_t matrix_rank(const IntMatrix& M);

// Elementwise helpers on vectors.
IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_neg(const IntVec& a);
IntVec vec_scaled(const IntVec& a, const Int& c);
Int vec_gcd(const IntVec& a);
Int dot(const IntVec& a, const IntVec& b);
bool vec_is_zero(const IntVec& a);

}  // namespace toric
