#include "toric/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace toric {

IntVec to_intvec(const std::vector<long>& v) {
    IntVec out;
    out.reserve(v.size());
    for (long x : v) out.emplace_back(x);
    return out;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged row list");
        std::size_t j = 0;
        for (long x : row) m.at(i, j++) = x;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::column(const IntVec& v) {
    IntMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
}

IntMatrix IntMatrix::diagonal(const IntVec& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

IntVec IntMatrix::row(std::size_t i) const {
    IntVec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

IntVec IntMatrix::col(std::size_t j) const {
    IntVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void IntMatrix::set_row(std::size_t i, const IntVec& v) {
    if (v.size() != cols_) throw std::invalid_argument("set_row size mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void IntMatrix::set_col(std::size_t j, const IntVec& v) {
    if (v.size() != rows_) throw std::invalid_argument("set_col size mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                p.at(i, j) += a * other.at(k, j);
        }
    return p;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + other.e_[i];
    return m;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - other.e_[i];
    return m;
}

IntVec IntMatrix::mul(const IntVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    IntVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) out[i] += at(i, j) * v[j];
    return out;
}

IntMatrix IntMatrix::scaled(const Int& c) const {
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * c;
    return m;
}

IntMatrix IntMatrix::hcat(const IntMatrix& other) const {
    if (rows_ != other.rows_) throw std::invalid_argument("hcat row mismatch");
    IntMatrix m(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) m.at(i, cols_ + j) = other.at(i, j);
    }
    return m;
}

IntMatrix IntMatrix::vcat(const IntMatrix& other) const {
    if (cols_ != other.cols_) throw std::invalid_argument("vcat column mismatch");
    IntMatrix m(rows_ + other.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < other.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(rows_ + i, j) = other.at(i, j);
    return m;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& idx) const {
    IntMatrix m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(idx[i], j);
    return m;
}

IntMatrix IntMatrix::select_cols(const std::vector<std::size_t>& idx) const {
    IntMatrix m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) m.at(i, j) = at(i, idx[j]);
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Int& x) { return x == 0; });
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

namespace {

struct SnfWork {
    IntMatrix S, U, Uinv, V, Vinv;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < S.cols(); ++j) std::swap(S.at(a, j), S.at(b, j));
        for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U.at(a, j), U.at(b, j));
        for (std::size_t i = 0; i < Uinv.rows(); ++i) std::swap(Uinv.at(i, a), Uinv.at(i, b));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < S.rows(); ++i) std::swap(S.at(i, a), S.at(i, b));
        for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V.at(i, a), V.at(i, b));
        for (std::size_t j = 0; j < Vinv.cols(); ++j) std::swap(Vinv.at(a, j), Vinv.at(b, j));
    }
    // row a += q * row b
    void add_row(std::size_t a, std::size_t b, const Int& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < S.cols(); ++j) S.at(a, j) += q * S.at(b, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U.at(a, j) += q * U.at(b, j);
        for (std::size_t i = 0; i < Uinv.rows(); ++i) Uinv.at(i, b) -= q * Uinv.at(i, a);
    }
    // col a += q * col b
    void add_col(std::size_t a, std::size_t b, const Int& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < S.rows(); ++i) S.at(i, a) += q * S.at(i, b);
        for (std::size_t i = 0; i < V.rows(); ++i) V.at(i, a) += q * V.at(i, b);
        for (std::size_t j = 0; j < Vinv.cols(); ++j) Vinv.at(b, j) -= q * Vinv.at(a, j);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < S.cols(); ++j) S.at(a, j) = -S.at(a, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U.at(a, j) = -U.at(a, j);
        for (std::size_t i = 0; i < Uinv.rows(); ++i) Uinv.at(i, a) = -Uinv.at(i, a);
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& M) {
    const std::size_t R = M.rows(), C = M.cols();
    SnfWork w{M, IntMatrix::identity(R), IntMatrix::identity(R), IntMatrix::identity(C),
              IntMatrix::identity(C)};

    std::size_t t = 0;
    const std::size_t dim = std::min(R, C);
    while (t < dim) {
        // pivot of minimal absolute value in the trailing block
        std::size_t pi = R, pj = C;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < C; ++j) {
                const Int& x = w.S.at(i, j);
                if (x == 0) continue;
                if (pi == R || mpz_cmpabs(x.get_mpz_t(), w.S.at(pi, pj).get_mpz_t()) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == R) break;  // trailing block is zero
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (w.S.at(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w.S.at(i, t).get_mpz_t(), w.S.at(t, t).get_mpz_t());
                w.add_row(i, t, -q);
                if (w.S.at(i, t) != 0) {  // remainder smaller than pivot: swap and restart
                    w.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (w.S.at(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w.S.at(t, j).get_mpz_t(), w.S.at(t, t).get_mpz_t());
                w.add_col(j, t, -q);
                if (w.S.at(t, j) != 0) {
                    w.swap_cols(t, j);
                    dirty = true;
                }
            }
        }
        ++t;
    }
    for (std::size_t i = 0; i < t; ++i)
        if (w.S.at(i, i) < 0) w.negate_row(i);

    // enforce the divisibility chain d_i | d_{i+1}
    for (bool again = true; again;) {
        again = false;
        for (std::size_t i = 0; i + 1 < t; ++i) {
            if (w.S.at(i + 1, i + 1) % w.S.at(i, i) == 0) continue;
            // fold d_{i+1} into position i and rediagonalize the 2x2 block
            w.add_col(i, i + 1, 1);
            Int a = w.S.at(i, i), b = w.S.at(i + 1, i);
            Int g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            // rows: new row i = x*row_i + y*row_{i+1}, keep unimodularity via the
            // complementary row (-b/g)*row_i + (a/g)*row_{i+1}
            Int bg = b / g, ag = a / g;
            // implement the 2x2 unimodular row mix by elementary steps:
            // [x y; -b/g a/g] has determinant (x*a + y*b)/g = 1
            // row ops: r_i' = x r_i + y r_j ; r_j' = -bg r_i'' ... do it directly:
            for (std::size_t j = 0; j < w.S.cols(); ++j) {
                Int si = w.S.at(i, j), sj = w.S.at(i + 1, j);
                w.S.at(i, j) = x * si + y * sj;
                w.S.at(i + 1, j) = -bg * si + ag * sj;
            }
            for (std::size_t j = 0; j < w.U.cols(); ++j) {
                Int ui = w.U.at(i, j), uj = w.U.at(i + 1, j);
                w.U.at(i, j) = x * ui + y * uj;
                w.U.at(i + 1, j) = -bg * ui + ag * uj;
            }
            // Uinv gets the inverse on columns: inverse of [x y; -bg ag] is [ag -y; bg x]
            for (std::size_t k = 0; k < w.Uinv.rows(); ++k) {
                Int ci = w.Uinv.at(k, i), cj = w.Uinv.at(k, i + 1);
                w.Uinv.at(k, i) = ci * ag + cj * bg;
                w.Uinv.at(k, i + 1) = -ci * y + cj * x;
            }
            // clear the off-diagonal entries the mix introduced
            Int q = w.S.at(i, i + 1) / w.S.at(i, i);
            w.add_col(i + 1, i, -q);
            q = w.S.at(i + 1, i) / w.S.at(i, i);  // divisible: g | b
            w.add_row(i + 1, i, -q);
            if (w.S.at(i + 1, i + 1) < 0) w.negate_row(i + 1);
            again = true;
        }
    }

    SmithResult res;
    res.U = std::move(w.U);
    res.S = std::move(w.S);
    res.V = std::move(w.V);
    res.Uinv = std::move(w.Uinv);
    res.Vinv = std::move(w.Vinv);
    res.rank = t;
    return res;
}

IntMatrix column_hermite_form(const IntMatrix& M) {
    IntMatrix W = M;
    const std::size_t R = W.rows(), C = W.cols();
    std::size_t lead = 0;
    for (std::size_t row = 0; row < R && lead < C; ++row) {
        // gcd-eliminate all entries of this row among columns lead..C-1
        for (;;) {
            std::size_t p = C;
            for (std::size_t j = lead; j < C; ++j) {
                if (W.at(row, j) == 0) continue;
                if (p == C || mpz_cmpabs(W.at(row, j).get_mpz_t(), W.at(row, p).get_mpz_t()) < 0) p = j;
            }
            if (p == C) break;  // row all zero in trailing block
            if (p != lead)
                for (std::size_t i = 0; i < R; ++i) std::swap(W.at(i, p), W.at(i, lead));
            bool others = false;
            for (std::size_t j = lead + 1; j < C; ++j) {
                if (W.at(row, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), W.at(row, j).get_mpz_t(), W.at(row, lead).get_mpz_t());
                for (std::size_t i = 0; i < R; ++i) W.at(i, j) -= q * W.at(i, lead);
                if (W.at(row, j) != 0) others = true;
            }
            if (!others) break;
        }
        if (W.at(row, lead) != 0) {
            if (W.at(row, lead) < 0)
                for (std::size_t i = 0; i < R; ++i) W.at(i, lead) = -W.at(i, lead);
            ++lead;
        }
    }
    // keep only the pivot columns (the rest are zero)
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < lead; ++j) keep.push_back(j);
    return W.select_cols(keep);
}

IntVec reduce_by_hermite(const IntMatrix& H, const IntVec& v) {
    if (v.size() != H.rows()) throw std::invalid_argument("reduce_by_hermite size mismatch");
    IntVec w = v;
    for (std::size_t j = 0; j < H.cols(); ++j) {
        std::size_t p = 0;
        while (p < H.rows() && H.at(p, j) == 0) ++p;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), w[p].get_mpz_t(), H.at(p, j).get_mpz_t());
        if (q == 0) continue;
        for (std::size_t i = p; i < H.rows(); ++i) w[i] -= q * H.at(i, j);
    }
    return w;
}

std::optional<IntVec> solve_integer(const IntMatrix& M, const IntVec& b) {
    if (b.size() != M.rows()) throw std::invalid_argument("solve_integer size mismatch");
    SmithResult snf = smith_normal_form(M);
    IntVec c = snf.U.mul(b);
    IntVec y(M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i) {
        if (i < snf.rank) {
            if (c[i] % snf.S.at(i, i) != 0) return std::nullopt;
            y[i] = c[i] / snf.S.at(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return snf.V.mul(y);
}

Int determinant(const IntMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = M.rows();
    if (n == 0) return 1;
    IntMatrix A = M;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && A.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j);
                mpz_divexact(A.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = A.at(k, k);
    }
    return sign * A.at(n - 1, n - 1);
}

std::size_t matrix_rank(const IntMatrix& M) { return smith_normal_form(M).rank; }

IntVec vec_add(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector sum size mismatch");
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector difference size mismatch");
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

IntVec vec_neg(const IntVec& a) {
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

IntVec vec_scaled(const IntVec& a, const Int& c) {
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
    return out;
}

Int vec_gcd(const IntVec& a) {
    Int g = 0;
    for (const Int& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot size mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool vec_is_zero(const IntVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

}  // namespace toric
