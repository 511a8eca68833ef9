#include "toric/stacky_fan.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace toric {

IntMatrix StackyFan::A() const {
    IntMatrix a(n + r(), r());
    for (std::size_t i = 0; i < r(); ++i) a.at(n + i, i) = torsion[i];
    return a;
}

IntVec StackyFan::ray_projection(std::size_t i) const {
    if (i < 1 || i > s()) throw std::out_of_range("ray index out of range");
    IntVec v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = B.at(k, i - 1);
    return v;
}

RayData StackyFan::ray_data(std::size_t i) const {
    IntVec p = ray_projection(i);
    Int g = vec_gcd(p);
    if (g == 0) throw std::domain_error("ray has zero free projection");
    IntVec v(n);
    for (std::size_t k = 0; k < n; ++k) mpz_divexact(v[k].get_mpz_t(), p[k].get_mpz_t(), g.get_mpz_t());
    return RayData{i, std::move(v), g};
}

Int cross2(const IntVec& a, const IntVec& b) { return a[0] * b[1] - a[1] * b[0]; }

namespace {
// half 0: angle in [0, pi), half 1: [pi, 2pi)
int half_of(const IntVec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; }
}  // namespace

bool angle_less(const IntVec& a, const IntVec& b) {
    int ha = half_of(a), hb = half_of(b);
    if (ha != hb) return ha < hb;
    return cross2(a, b) > 0;
}

std::vector<std::size_t> StackyFan::cyclic_ray_order() const {
    if (n != 2) throw std::domain_error("cyclic_ray_order requires n == 2");
    std::vector<std::size_t> order(s());
    for (std::size_t i = 0; i < s(); ++i) order[i] = i + 1;
    std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
        return angle_less(ray_projection(a), ray_projection(b));
    });
    return order;
}

std::vector<std::string> StackyFan::validate() const {
    std::vector<std::string> bad;
    auto report = [&bad](const std::string& msg) { bad.push_back(msg); };

    for (std::size_t i = 0; i < torsion.size(); ++i)
        if (torsion[i] < 2) report("torsion coefficient a_" + std::to_string(i + 1) + " must be >= 2");
    if (B.rows() != n + r()) {
        report("B must have n + r rows");
        return bad;
    }

    for (std::size_t i = 1; i <= s(); ++i) {
        IntVec p = ray_projection(i);
        if (vec_is_zero(p)) report("ray " + std::to_string(i) + " projects to zero in Z^n");
    }
    if (!bad.empty()) return bad;

    // cone index sets
    for (std::size_t c = 0; c < max_cones.size(); ++c) {
        const auto& cone = max_cones[c];
        std::set<std::size_t> seen;
        bool malformed = false;
        for (std::size_t i : cone) {
            if (i < 1 || i > s()) {
                report("cone " + std::to_string(c + 1) + " has out-of-range ray index");
                malformed = true;
            } else if (!seen.insert(i).second) {
                report("cone " + std::to_string(c + 1) + " has a duplicate ray index");
                malformed = true;
            }
        }
        if (malformed) continue;
        if (cone.size() != n) {
            report("cone " + std::to_string(c + 1) + " is not full-dimensional (simplicial, n rays)");
            continue;
        }
        if (n > 0) {
            IntMatrix gen(n, n);
            for (std::size_t j = 0; j < n; ++j) gen.set_col(j, ray_projection(cone[j]));
            if (determinant(gen) == 0)
                report("cone " + std::to_string(c + 1) + " has linearly dependent rays");
        }
    }
    if (!bad.empty()) return bad;

    if (n == 1) {
        if (s() != 2 || max_cones.size() != 2) {
            report("completeness: a complete 1-dimensional fan has exactly two opposite rays");
        } else {
            Int p1 = ray_projection(1)[0], p2 = ray_projection(2)[0];
            if ((p1 > 0) == (p2 > 0)) report("completeness: the two ray signs must be {+, -}");
            std::set<std::set<std::size_t>> got;
            for (const auto& cone : max_cones) got.insert({cone.begin(), cone.end()});
            if (got != std::set<std::set<std::size_t>>{{1}, {2}})
                report("completeness: max cones must be {1} and {2}");
        }
    } else if (n == 2) {
        if (s() < 3) {
            report("completeness: a complete 2-dimensional fan needs at least 3 rays");
            return bad;
        }
        std::vector<std::size_t> order = cyclic_ray_order();
        for (std::size_t i = 0; i < s(); ++i) {
            IntVec a = ray_projection(order[i]);
            IntVec b = ray_projection(order[(i + 1) % s()]);
            if (cross2(a, b) == 0 && dot(a, b) > 0) {
                report("rays " + std::to_string(order[i]) + " and " + std::to_string(order[(i + 1) % s()]) +
                       " span the same direction");
                return bad;
            }
        }
        std::set<std::set<std::size_t>> expected, got;
        for (std::size_t i = 0; i < s(); ++i) {
            IntVec a = ray_projection(order[i]);
            IntVec b = ray_projection(order[(i + 1) % s()]);
            if (cross2(a, b) <= 0) {
                std::ostringstream os;
                os << "completeness: angular gap >= pi between rays " << order[i] << " and "
                   << order[(i + 1) % s()];
                report(os.str());
            }
            expected.insert({order[i], order[(i + 1) % s()]});
        }
        for (const auto& cone : max_cones) got.insert({cone.begin(), cone.end()});
        if (bad.empty() && got != expected)
            report("completeness: max cones must be exactly the consecutive ray pairs");
    } else if (n >= 3) {
        report("notice: completeness unchecked for n >= 3");
    }
    return bad;
}

StackyFan projective_plane() {
    StackyFan fan;
    fan.n = 2;
    fan.B = IntMatrix::from_rows({{1, 0, -1}, {0, 1, -1}});
    fan.max_cones = {{1, 2}, {2, 3}, {3, 1}};
    return fan;
}

StackyFan weighted_projective(const std::vector<long>& weights) {
    if (weights.size() < 2) throw std::invalid_argument("weighted projective space needs >= 2 weights");
    for (long w : weights)
        if (w <= 0) throw std::invalid_argument("weighted projective weights must be positive");
    const std::size_t n = weights.size() - 1;
    IntMatrix A0 = IntMatrix::column(to_intvec(weights));
    IntMatrix B0 = IntMatrix::identity(n + 1);
    // max cones: all n-subsets of the n+1 rays
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t skip = 1; skip <= n + 1; ++skip) {
        std::vector<std::size_t> cone;
        for (std::size_t i = 1; i <= n + 1; ++i)
            if (i != skip) cone.push_back(i);
        cones.push_back(std::move(cone));
    }
    return normalize_presentation(A0, B0, std::move(cones)).fan;
}

NormalizedPresentation normalize_presentation(const IntMatrix& A0, const IntMatrix& B0,
                                              std::vector<std::vector<std::size_t>> max_cones) {
    if (A0.rows() != B0.rows()) throw std::invalid_argument("presentation row mismatch");
    const std::size_t R = A0.rows(), r0 = A0.cols();
    SmithResult snf = smith_normal_form(A0);
    if (snf.rank != r0) throw std::invalid_argument("presentation matrix must have full column rank");

    IntMatrix Bhat = snf.U * B0;
    std::vector<std::size_t> free_rows, torsion_rows, dead_rows;
    IntVec factors;
    for (std::size_t i = 0; i < R; ++i) {
        if (i >= r0) {
            free_rows.push_back(i);
        } else if (snf.S.at(i, i) >= 2) {
            torsion_rows.push_back(i);
            factors.push_back(snf.S.at(i, i));
        } else {
            dead_rows.push_back(i);
        }
    }

    NormalizedPresentation out;
    out.fan.n = free_rows.size();
    out.fan.torsion = factors;
    std::vector<std::size_t> kept = free_rows;
    kept.insert(kept.end(), torsion_rows.begin(), torsion_rows.end());
    out.fan.B = Bhat.select_rows(kept);
    out.fan.max_cones = std::move(max_cones);

    // coordinate transport: l-tilde = V^t * l0, dead generators substitute into k
    IntMatrix Vt = snf.V.transpose();
    out.l_to_l = Vt.select_rows(torsion_rows);
    out.l_to_k = Bhat.select_rows(dead_rows).transpose().scaled(-1) * Vt.select_rows(dead_rows);

    out.U = snf.U;
    out.Uinv = snf.Uinv;
    out.V = snf.V;
    out.free_rows = free_rows;
    out.torsion_rows = torsion_rows;
    out.dead_rows = dead_rows;

    // sanity: every old relation row of (B0|A0) must land in the new relation lattice
    IntMatrix new_rel = out.fan.B.hcat(out.fan.A()).transpose();
    for (std::size_t rho = 0; rho < R; ++rho) {
        IntVec k_old = B0.row(rho), l_old = A0.row(rho);
        IntVec k_new = vec_add(k_old, out.l_to_k.mul(l_old));
        IntVec l_new = out.l_to_l.mul(l_old);
        IntVec w = k_new;
        w.insert(w.end(), l_new.begin(), l_new.end());
        if (!solve_integer(new_rel, w))
            throw std::logic_error("presentation normalization lost a relation");
    }
    return out;
}

}  // namespace toric
