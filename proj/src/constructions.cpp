#include "toric/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace toric {

namespace {

// is w inside the cone spanned by the given target rays? (n <= 2)
bool in_cone(const StackyFan& fan, const std::vector<std::size_t>& cone, const IntVec& w) {
    if (fan.n == 0) return true;
    if (fan.n == 1) {
        Int u = fan.ray_projection(cone[0])[0];
        return (u > 0 && w[0] >= 0) || (u < 0 && w[0] <= 0);
    }
    IntVec a = fan.ray_projection(cone[0]);
    IntVec b = fan.ray_projection(cone[1]);
    if (cross2(a, b) < 0) std::swap(a, b);
    return cross2(a, w) >= 0 && cross2(w, b) >= 0;
}

IntMatrix insertion_matrix(std::size_t rows, const std::vector<std::size_t>& at) {
    IntMatrix M(rows, at.size());
    for (std::size_t t = 0; t < at.size(); ++t) M.at(at[t], t) = 1;
    return M;
}

// transport morphism data given on an un-normalized source presentation
// (A0, B0) onto the normalized presentation np of the same source
ToricMorphism transport_source(const NormalizedPresentation& np, const IntMatrix& B0,
                               const StackyFan& target, IntMatrix C, const IntMatrix& D0,
                               const IntMatrix& E0, const IntMatrix& F0) {
    std::vector<std::size_t> kept = np.free_rows;
    kept.insert(kept.end(), np.torsion_rows.begin(), np.torsion_rows.end());

    ToricMorphism phi;
    phi.source = np.fan;
    phi.target = target;
    phi.C = std::move(C);
    phi.D = D0 * np.Uinv * insertion_matrix(np.Uinv.cols(), kept);
    phi.E = E0 * np.V.select_cols(np.torsion_rows);
    IntMatrix Bdead = (np.U * B0).select_rows(np.dead_rows);
    phi.F = F0 - E0 * (np.V.select_cols(np.dead_rows) * Bdead);
    return phi;
}

}  // namespace

std::vector<std::string> ToricMorphism::validate() const {
    std::vector<std::string> bad;
    const std::size_t ss = source.s(), st = target.s();
    const std::size_t hs = source.n + source.r(), ht = target.n + target.r();
    if (C.rows() != st || C.cols() != ss) bad.push_back("C must be s_target x s_source");
    if (D.rows() != ht || D.cols() != hs) bad.push_back("D must match the ambient lattices");
    if (E.rows() != target.r() || E.cols() != source.r()) bad.push_back("E must be r_target x r_source");
    if (F.rows() != target.r() || F.cols() != ss) bad.push_back("F must be r_target x s_source");
    if (!bad.empty()) return bad;

    if (!(D * source.B - target.B * C == target.A() * F))
        bad.push_back("homotopy identity D*B - B'*C = A'*F fails");
    if (!(D * source.A() == target.A() * E))
        bad.push_back("right square D*A = A'*E fails");

    if (source.n > 2 || target.n > 2) {
        bad.push_back("notice: cone conditions unchecked for n >= 3");
        return bad;
    }

    // free-part images of the source rays under gamma_2
    std::vector<IntVec> image(ss);
    for (std::size_t j = 0; j < ss; ++j) {
        IntVec full = D.mul(source.B.col(j));
        image[j] = IntVec(full.begin(), full.begin() + target.n);
    }

    // (T1): each source cone maps into a single target cone
    for (std::size_t c = 0; c < source.max_cones.size(); ++c) {
        bool hit = target.max_cones.empty() && target.n == 0;
        for (const auto& tc : target.max_cones) {
            bool all = true;
            for (std::size_t i : source.max_cones[c])
                if (!in_cone(target, tc, image[i - 1])) all = false;
            if (all) {
                hit = true;
                break;
            }
        }
        if (!hit) bad.push_back("(T1) fails: source cone " + std::to_string(c + 1) +
                                " maps into no target cone");
    }

    // (T2): each ray routes with nonnegative coefficients into the rays of a
    // target cone that contains its image
    for (std::size_t j = 0; j < ss; ++j) {
        bool nonneg = true;
        for (std::size_t i = 0; i < st; ++i)
            if (C.at(i, j) < 0) nonneg = false;
        if (!nonneg) {
            bad.push_back("(T2) fails: negative entry in C column " + std::to_string(j + 1));
            continue;
        }
        bool routed = target.max_cones.empty() && target.n == 0;
        for (const auto& tc : target.max_cones) {
            if (!in_cone(target, tc, image[j])) continue;
            bool supported = true;
            for (std::size_t i = 0; i < st; ++i)
                if (C.at(i, j) != 0 &&
                    std::find(tc.begin(), tc.end(), i + 1) == tc.end())
                    supported = false;
            if (supported) {
                routed = true;
                break;
            }
        }
        if (!routed)
            bad.push_back("(T2) fails: ray " + std::to_string(j + 1) +
                          " is not supported on a receiving cone");
    }
    return bad;
}

ToricMorphism identity_morphism(const StackyFan& fan) {
    ToricMorphism phi;
    phi.source = fan;
    phi.target = fan;
    phi.C = IntMatrix::identity(fan.s());
    phi.D = IntMatrix::identity(fan.n + fan.r());
    phi.E = IntMatrix::identity(fan.r());
    phi.F = IntMatrix::zero(fan.r(), fan.s());
    return phi;
}

ToricMorphism frobenius_morphism(const StackyFan& fan, const Int& m) {
    if (m < 1) throw std::invalid_argument("Frobenius order must be >= 1");
    ToricMorphism phi = identity_morphism(fan);
    phi.C = phi.C.scaled(m);
    phi.D = phi.D.scaled(m);
    phi.E = phi.E.scaled(m);
    return phi;
}

LineBundle pullback(const ToricMorphism& phi, const PicardGroup& source_pic,
                    const LineBundle& L_target) {
    if (!(source_pic.fan() == phi.source))
        throw std::invalid_argument("pullback needs the Picard group of the morphism source");
    IntVec k = vec_add(phi.C.transpose().mul(L_target.k), phi.F.transpose().mul(L_target.l));
    IntVec l = phi.E.transpose().mul(L_target.l);
    return source_pic.bundle(k, l);
}

FanWithMorphism root_stack_divisors(const StackyFan& fan, const IntVec& c) {
    if (c.size() != fan.s()) throw std::invalid_argument("need one root order per ray");
    for (const Int& ci : c)
        if (ci < 1) throw std::invalid_argument("root orders must be positive");

    FanWithMorphism out;
    out.fan = fan;
    out.fan.B = fan.B * IntMatrix::diagonal(c);
    out.phi = identity_morphism(fan);
    out.phi.source = out.fan;
    out.phi.C = IntMatrix::diagonal(c);
    return out;
}

RootStackResult root_stack_line_bundles(const StackyFan& fan,
                                        const std::vector<LineBundle>& bundles, const IntVec& e) {
    const std::size_t extra = bundles.size();
    if (extra == 0 || e.size() != extra)
        throw std::invalid_argument("need one positive root order per bundle");
    for (const Int& ei : e)
        if (ei < 1) throw std::invalid_argument("root orders must be positive");
    const std::size_t n = fan.n, r = fan.r(), s = fan.s();
    for (const LineBundle& L : bundles)
        if (L.k.size() != s || L.l.size() != r)
            throw std::invalid_argument("bundle coordinates do not match the fan");

    // A' = [A 0; -^t l_i  diag(e)],  B' = [B; -^t k_i]
    IntMatrix A1(n + r + extra, r + extra);
    IntMatrix A = fan.A();
    for (std::size_t i = 0; i < n + r; ++i)
        for (std::size_t j = 0; j < r; ++j) A1.at(i, j) = A.at(i, j);
    for (std::size_t t = 0; t < extra; ++t) {
        for (std::size_t j = 0; j < r; ++j) A1.at(n + r + t, j) = -bundles[t].l[j];
        A1.at(n + r + t, r + t) = e[t];
    }
    IntMatrix B1 = fan.B;
    for (std::size_t t = 0; t < extra; ++t) B1 = B1.vcat(IntMatrix::column(bundles[t].k).transpose().scaled(-1));

    NormalizedPresentation np = normalize_presentation(A1, B1, fan.max_cones);

    IntMatrix D0 = IntMatrix::identity(n + r).hcat(IntMatrix::zero(n + r, extra));
    IntMatrix E0 = IntMatrix::identity(r).hcat(IntMatrix::zero(r, extra));
    RootStackResult out;
    out.fan = np.fan;
    out.phi = transport_source(np, B1, fan, IntMatrix::identity(s), D0, E0,
                               IntMatrix::zero(r, s));
    out.l_to_k = np.l_to_k;
    out.l_to_l = np.l_to_l;
    return out;
}

LineBundle RootStackResult::gerbe_generator(const PicardGroup& root_pic, std::size_t k) const {
    const std::size_t r = phi.target.r();
    return root_pic.bundle(l_to_k.col(r + k), l_to_l.col(r + k));
}

RigidificationResult rigidification(const StackyFan& fan) {
    RigidificationResult out;
    out.fan.n = fan.n;
    out.fan.max_cones = fan.max_cones;
    std::vector<std::size_t> top(fan.n);
    for (std::size_t i = 0; i < fan.n; ++i) top[i] = i;
    out.fan.B = fan.B.select_rows(top);

    out.phi.source = fan;
    out.phi.target = out.fan;
    out.phi.C = IntMatrix::identity(fan.s());
    out.phi.D = IntMatrix::identity(fan.n).hcat(IntMatrix::zero(fan.n, fan.r()));
    out.phi.E = IntMatrix::zero(0, fan.r());
    out.phi.F = IntMatrix::zero(0, fan.s());
    return out;
}

SubstackResult substack(const StackyFan& fan, const std::vector<std::size_t>& tau) {
    if (tau.empty()) throw std::invalid_argument("tau must be a nonzero cone");
    std::set<std::size_t> tset(tau.begin(), tau.end());
    if (tset.size() != tau.size()) throw std::invalid_argument("tau has repeated rays");
    for (std::size_t i : tau)
        if (i < 1 || i > fan.s()) throw std::invalid_argument("tau ray index out of range");

    auto contains = [](const std::vector<std::size_t>& cone, const std::set<std::size_t>& sub) {
        for (std::size_t i : sub)
            if (std::find(cone.begin(), cone.end(), i) == cone.end()) return false;
        return true;
    };
    bool is_face = false;
    for (const auto& cone : fan.max_cones)
        if (contains(cone, tset)) is_face = true;
    if (!is_face) throw std::invalid_argument("tau is not a cone of the fan");

    SubstackResult out;
    out.tau.assign(tset.begin(), tset.end());

    // rays staying as divisors: adjacent to tau but not in it
    for (std::size_t i = 1; i <= fan.s(); ++i) {
        if (tset.count(i)) continue;
        std::set<std::size_t> probe = tset;
        probe.insert(i);
        for (const auto& cone : fan.max_cones)
            if (contains(cone, probe)) {
                out.divisor_rays.push_back(i);
                break;
            }
    }

    std::vector<std::size_t> div0, tau0;
    for (std::size_t i : out.divisor_rays) div0.push_back(i - 1);
    for (std::size_t i : out.tau) tau0.push_back(i - 1);
    IntMatrix B_tau = fan.B.select_cols(div0);
    IntMatrix A_tau = fan.B.select_cols(tau0).hcat(fan.A());

    std::vector<std::vector<std::size_t>> cones;
    for (const auto& cone : fan.max_cones) {
        if (!contains(cone, tset)) continue;
        std::vector<std::size_t> projected;
        for (std::size_t i : cone) {
            if (tset.count(i)) continue;
            auto it = std::find(out.divisor_rays.begin(), out.divisor_rays.end(), i);
            projected.push_back(std::size_t(it - out.divisor_rays.begin()) + 1);
        }
        if (!projected.empty()) cones.push_back(std::move(projected));
    }

    NormalizedPresentation np = normalize_presentation(A_tau, B_tau, std::move(cones));
    out.fan = np.fan;
    out.l_to_k = np.l_to_k;
    out.l_to_l = np.l_to_l;
    return out;
}

LineBundle restrict_bundle(const SubstackResult& sub, const PicardGroup& sub_pic, const IntVec& k,
                           const IntVec& l) {
    IntVec k_sub;
    for (std::size_t i : sub.divisor_rays) k_sub.push_back(k.at(i - 1));
    IntVec l_old;
    for (std::size_t i : sub.tau) l_old.push_back(k.at(i - 1));
    l_old.insert(l_old.end(), l.begin(), l.end());
    return sub_pic.bundle(vec_add(k_sub, sub.l_to_k.mul(l_old)), sub.l_to_l.mul(l_old));
}

BlowupResult weighted_blowup(const StackyFan& fan, const std::vector<std::size_t>& sigma,
                             const IntVec& v_new) {
    if (!fan.is_orbifold()) throw std::domain_error("weighted blow-up requires an orbifold");
    if (fan.n != 2) throw std::domain_error("weighted blow-up implemented for dimension 2");
    if (sigma.size() != 2) throw std::invalid_argument("sigma must be a 2-cone");
    bool found = false;
    for (const auto& cone : fan.max_cones)
        found = found || std::set<std::size_t>(cone.begin(), cone.end()) ==
                             std::set<std::size_t>(sigma.begin(), sigma.end());
    if (!found) throw std::invalid_argument("sigma is not a maximal cone of the fan");
    if (v_new.size() != 2 || vec_is_zero(v_new)) throw std::invalid_argument("bad ray vector");
    if (vec_gcd(v_new) != 1) throw std::invalid_argument("inserted ray must be primitive");

    std::size_t i = sigma[0], j = sigma[1];
    RayData ri = fan.ray_data(i), rj = fan.ray_data(j);
    if (cross2(ri.v, rj.v) < 0) {
        std::swap(i, j);
        std::swap(ri, rj);
    }
    Int d = cross2(ri.v, rj.v);
    Int p1 = cross2(v_new, rj.v), p2 = cross2(ri.v, v_new);
    if (p1 <= 0 || p2 <= 0)
        throw std::invalid_argument("inserted ray must lie strictly inside sigma");

    // m v_new = h1 v_i + h2 v_j with minimal positive m (then the h are coprime)
    Rat alpha(p1, d), beta(p2, d);
    alpha.canonicalize();
    beta.canonicalize();
    Int m;
    mpz_lcm(m.get_mpz_t(), alpha.get_den().get_mpz_t(), beta.get_den().get_mpz_t());
    Int h1 = m * alpha.get_num() / alpha.get_den();
    Int h2 = m * beta.get_num() / beta.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), h1.get_mpz_t(), h2.get_mpz_t());
    if (g != 1) throw std::logic_error("minimal relation is not coprime");

    // minimal h with h*h1/b_i and h*h2/b_j integral
    auto lift = [](const Int& h, const Int& b) {
        Int g2;
        mpz_gcd(g2.get_mpz_t(), h.get_mpz_t(), b.get_mpz_t());
        return Int(b / g2);
    };
    Int h;
    mpz_lcm(h.get_mpz_t(), lift(h1, ri.b).get_mpz_t(), lift(h2, rj.b).get_mpz_t());
    Int c1 = h * h1 / ri.b, c2 = h * h2 / rj.b;
    Int b_new = h * m;

    BlowupResult out;
    out.v_new = v_new;
    out.m = m;
    out.h = {h1, h2};
    out.h_scale = h;
    out.b_new = b_new;
    out.c = {c1, c2};

    const std::size_t s = fan.s();
    out.fan.n = 2;
    out.fan.B = fan.B.hcat(IntMatrix::column(vec_scaled(v_new, b_new)));
    for (const auto& cone : fan.max_cones) {
        if (std::set<std::size_t>(cone.begin(), cone.end()) == std::set<std::size_t>{i, j}) continue;
        out.fan.max_cones.push_back(cone);
    }
    out.fan.max_cones.push_back({i, s + 1});
    out.fan.max_cones.push_back({s + 1, j});

    out.phi.source = out.fan;
    out.phi.target = fan;
    IntMatrix C = IntMatrix::identity(s).hcat(IntMatrix::zero(s, 1));
    C.at(i - 1, s) = c1;
    C.at(j - 1, s) = c2;
    out.phi.C = std::move(C);
    out.phi.D = IntMatrix::identity(2);
    out.phi.E = IntMatrix::zero(0, 0);
    out.phi.F = IntMatrix::zero(0, s + 1);
    return out;
}

ResolutionResult resolve_2d(const StackyFan& fan) {
    if (!fan.is_orbifold() || fan.n != 2)
        throw std::domain_error("resolution implemented for 2-dimensional orbifolds");
    auto bad = fan.validate();
    if (!bad.empty()) throw std::domain_error("resolution requires a valid fan: " + bad[0]);

    ResolutionResult out;
    out.fan = fan;
    for (;;) {
        std::vector<std::size_t> order = out.fan.cyclic_ray_order();
        std::size_t a = 0, b = 0;
        Int det = 0;
        for (std::size_t t = 0; t < order.size(); ++t) {
            std::size_t u = order[t], w = order[(t + 1) % order.size()];
            Int d = cross2(out.fan.ray_data(u).v, out.fan.ray_data(w).v);
            if (d > 1) {
                a = u;
                b = w;
                det = d;
                break;
            }
        }
        if (det == 0) break;

        // interior lattice point adjacent to the first ray: minimal height over
        // v_a, then minimal height over v_b; p = (x*v_a + y*v_b)/det
        IntVec va = out.fan.ray_data(a).v, vb = out.fan.ray_data(b).v;
        IntVec best;
        for (Int y = 1; y < det && best.empty(); y += 1)
            for (Int x = 1; x < det && best.empty(); x += 1) {
                IntVec num = vec_add(vec_scaled(va, x), vec_scaled(vb, y));
                if (num[0] % det == 0 && num[1] % det == 0) best = {num[0] / det, num[1] / det};
            }
        if (best.empty()) throw std::logic_error("singular cone without interior lattice point");
        out.steps.push_back(weighted_blowup(out.fan, {a, b}, best));
        out.fan = out.steps.back().fan;
    }
    return out;
}

}  // namespace toric
