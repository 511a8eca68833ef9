#include "toric/frobenius.hpp"

#include <stdexcept>

namespace toric {

namespace {

// iterate over [0, m-1]^dim, calling f on each tuple
template <typename F>
void for_each_tuple(std::size_t dim, const Int& m, F&& f) {
    IntVec u(dim);
    for (;;) {
        f(u);
        std::size_t i = 0;
        while (i < dim && ++u[i] == m) u[i++] = 0;
        if (i == dim) return;
    }
}

}  // namespace

SummandMultiset pushforward_by_characters(const PicardGroup& pic, const LineBundle& L,
                                          const Int& m) {
    if (m < 1) throw std::invalid_argument("push-forward degree m must be >= 1");
    const StackyFan& fan = pic.fan();
    const FgAbGroup& G = pic.group();

    SummandMultiset out;
    for_each_tuple(fan.s(), m, [&](const IntVec& j) {
        IntVec jl = j;
        jl.resize(fan.s() + fan.r());  // j + 0 on the torsion generators
        GroupElement t = G.sub(L.cls, G.project(jl));
        for (const GroupElement& chi : G.divide_element(t, m)) out[pic.from_class(chi)] += 1;
    });
    return out;
}

std::set<LineBundle> pushforward_by_lattice(const PicardGroup& pic, const LineBundle& L,
                                            const Int& m) {
    if (m < 1) throw std::invalid_argument("push-forward degree m must be >= 1");
    const StackyFan& fan = pic.fan();
    const std::size_t n = fan.n, r = fan.r(), s = fan.s();

    std::set<LineBundle> out;
    for_each_tuple(n + r, m, [&](const IntVec& u) {
        // torsion coordinates first: (l_i + a_i * u_{n+i}) must be divisible by m
        IntVec l2(r);
        for (std::size_t i = 0; i < r; ++i) {
            Int num = L.l[i] + fan.torsion[i] * u[n + i];
            if (num % m != 0) return;
            l2[i] = num / m;
        }
        IntVec k2(s);
        for (std::size_t j = 0; j < s; ++j) {
            Int num = L.k[j] + dot(fan.B.col(j), u);
            mpz_fdiv_q(k2[j].get_mpz_t(), num.get_mpz_t(), m.get_mpz_t());
        }
        out.insert(pic.bundle(k2, l2));
    });
    return out;
}

Int stable_denominator(const StackyFan& fan) {
    const std::size_t d = fan.n + fan.r();

    // candidate normal vectors: columns of B, columns of A, standard basis
    std::vector<IntVec> normals;
    for (std::size_t j = 0; j < fan.s(); ++j) normals.push_back(fan.B.col(j));
    IntMatrix A = fan.A();
    for (std::size_t j = 0; j < fan.r(); ++j) normals.push_back(A.col(j));
    for (std::size_t i = 0; i < d; ++i) {
        IntVec e(d);
        e[i] = 1;
        normals.push_back(std::move(e));
    }

    // g = lcm of |nonzero d x d determinants| over all row choices
    Int g = 1;
    std::vector<std::size_t> pick(d);
    auto rec = [&](auto&& self, std::size_t level, std::size_t start) -> void {
        if (level == d) {
            IntMatrix M(d, d);
            for (std::size_t i = 0; i < d; ++i) M.set_row(i, normals[pick[i]]);
            Int det = abs(determinant(M));
            if (det != 0) mpz_lcm(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
            return;
        }
        for (std::size_t j = start; j < normals.size(); ++j) {
            pick[level] = j;
            self(self, level + 1, j + 1);
        }
    };
    rec(rec, 0, 0);

    // cell barycenters have denominator dividing g * lcm(1..d+1)
    Int fac = 1;
    for (std::size_t i = 2; i <= d + 1; ++i)
        mpz_lcm(fac.get_mpz_t(), fac.get_mpz_t(), Int(i).get_mpz_t());
    return g * fac;
}

std::set<LineBundle> stable_summands(const PicardGroup& pic) {
    Int mstar = stable_denominator(pic.fan());
    std::set<LineBundle> out = pushforward_by_lattice(pic, pic.trivial(), mstar);
#ifndef NDEBUG
    if (out != pushforward_by_lattice(pic, pic.trivial(), 2 * mstar))
        throw std::logic_error("stable summand grid failed the doubling self-check");
#endif
    return out;
}

bool rootstack_summand_decomposition_check(const PicardGroup& pic) {
    const StackyFan& fan = pic.fan();
    const std::size_t n = fan.n, r = fan.r();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < fan.s(); ++j)
            if (fan.B.at(n + i, j) != 0)
                throw std::domain_error(
                    "decomposition check needs the torsion rows of B to vanish");

    // rigidification: drop the torsion part of N
    StackyFan rig;
    rig.n = n;
    rig.B = IntMatrix(n, fan.s());
    for (std::size_t i = 0; i < n; ++i) rig.B.set_row(i, fan.B.row(i));
    rig.max_cones = fan.max_cones;
    PicardGroup pic_rig(rig);

    std::set<LineBundle> rhs;
    std::set<LineBundle> base = stable_summands(pic_rig);
    IntVec l(r);
    for (;;) {
        for (const LineBundle& L : base) rhs.insert(pic.bundle(L.k, l));
        std::size_t i = 0;
        while (i < r && ++l[i] == fan.torsion[i]) l[i++] = 0;
        if (i == r) break;
    }
    return rhs == stable_summands(pic);
}

}  // namespace toric
