#include "toric/abelian.hpp"

#include <sstream>
#include <stdexcept>

namespace toric {

std::string GroupElement::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < free_part.size(); ++i) os << (i ? "," : "") << free_part[i].get_str();
    os << "|";
    for (std::size_t i = 0; i < torsion_part.size(); ++i)
        os << (i ? "," : "") << torsion_part[i].get_str();
    os << ")";
    return os.str();
}

FgAbGroup cokernel(const IntMatrix& M) {
    SmithResult snf = smith_normal_form(M);
    const std::size_t R = M.rows();

    std::vector<std::size_t> free_rows, torsion_rows;
    IntVec factors;
    for (std::size_t i = 0; i < R; ++i) {
        if (i >= snf.rank) {
            free_rows.push_back(i);
        } else if (snf.S.at(i, i) >= 2) {
            torsion_rows.push_back(i);
            factors.push_back(snf.S.at(i, i));
        }
        // d_i == 1 rows die in the quotient
    }

    std::vector<std::size_t> kept = free_rows;
    kept.insert(kept.end(), torsion_rows.begin(), torsion_rows.end());

    FgAbGroup G;
    G.free_rank_ = free_rows.size();
    G.factors_ = std::move(factors);
    G.to_normal_ = snf.U.select_rows(kept);
    G.from_normal_ = snf.Uinv.select_cols(kept);
    return G;
}

GroupElement FgAbGroup::zero() const {
    return GroupElement{IntVec(free_rank_), IntVec(factors_.size())};
}

GroupElement FgAbGroup::project(const IntVec& v) const {
    IntVec w = to_normal_.mul(v);
    GroupElement g;
    g.free_part.assign(w.begin(), w.begin() + free_rank_);
    g.torsion_part.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i)
        mpz_fdiv_r(g.torsion_part[i].get_mpz_t(), w[free_rank_ + i].get_mpz_t(),
                   factors_[i].get_mpz_t());
    return g;
}

IntVec FgAbGroup::representative(const GroupElement& g) const {
    IntVec w = g.free_part;
    w.insert(w.end(), g.torsion_part.begin(), g.torsion_part.end());
    return from_normal_.mul(w);
}

GroupElement FgAbGroup::add(const GroupElement& a, const GroupElement& b) const {
    GroupElement g;
    g.free_part = vec_add(a.free_part, b.free_part);
    g.torsion_part.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        Int s = a.torsion_part[i] + b.torsion_part[i];
        mpz_fdiv_r(g.torsion_part[i].get_mpz_t(), s.get_mpz_t(), factors_[i].get_mpz_t());
    }
    return g;
}

GroupElement FgAbGroup::sub(const GroupElement& a, const GroupElement& b) const {
    return add(a, neg(b));
}

GroupElement FgAbGroup::neg(const GroupElement& a) const {
    GroupElement g;
    g.free_part = vec_neg(a.free_part);
    g.torsion_part.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        Int s = -a.torsion_part[i];
        mpz_fdiv_r(g.torsion_part[i].get_mpz_t(), s.get_mpz_t(), factors_[i].get_mpz_t());
    }
    return g;
}

GroupElement FgAbGroup::scale(const Int& m, const GroupElement& a) const {
    GroupElement g;
    g.free_part = vec_scaled(a.free_part, m);
    g.torsion_part.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        Int s = m * a.torsion_part[i];
        mpz_fdiv_r(g.torsion_part[i].get_mpz_t(), s.get_mpz_t(), factors_[i].get_mpz_t());
    }
    return g;
}

bool FgAbGroup::is_zero(const GroupElement& a) const {
    return vec_is_zero(a.free_part) && vec_is_zero(a.torsion_part);
}

std::vector<GroupElement> FgAbGroup::divide_element(const GroupElement& t, const Int& m) const {
    if (m < 1) throw std::invalid_argument("divide_element: m must be positive");

    // free coordinates: exact divisibility, unique choice
    IntVec free_sol(free_rank_);
    for (std::size_t i = 0; i < free_rank_; ++i) {
        if (t.free_part[i] % m != 0) return {};
        free_sol[i] = t.free_part[i] / m;
    }

    // torsion coordinate i: m*x = t_i (mod d) has gcd(m,d) solutions iff gcd(m,d) | t_i
    std::vector<IntVec> torsion_sols(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const Int& d = factors_[i];
        Int g;
        mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
        if (t.torsion_part[i] % g != 0) return {};
        Int m1 = m / g, d1 = d / g, t1 = t.torsion_part[i] / g;
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), d1.get_mpz_t()) == 0) inv = 0;  // d1 == 1
        Int x0;
        Int prod = inv * t1;
        mpz_fdiv_r(x0.get_mpz_t(), prod.get_mpz_t(), d1.get_mpz_t());
        for (Int k = 0; k < g; ++k) {
            Int x = x0 + k * d1;
            mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
            torsion_sols[i].push_back(x);
        }
    }

    std::vector<GroupElement> out;
    IntVec cur(factors_.size());
    std::vector<std::size_t> pick(factors_.size(), 0);
    for (;;) {
        GroupElement g;
        g.free_part = free_sol;
        g.torsion_part.resize(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i)
            g.torsion_part[i] = torsion_sols[i][pick[i]];
        out.push_back(std::move(g));
        std::size_t i = 0;
        while (i < factors_.size() && ++pick[i] == torsion_sols[i].size()) pick[i++] = 0;
        if (i == factors_.size()) break;
    }
    return out;
}

std::vector<GroupElement> divide_element(const FgAbGroup& G, const GroupElement& t, const Int& m) {
    return G.divide_element(t, m);
}

}  // namespace toric
