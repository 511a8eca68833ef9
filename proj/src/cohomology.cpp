#include "toric/cohomology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace toric {

namespace {

void require_orbifold_low_dim(const StackyFan& fan) {
    if (!fan.torsion.empty())
        throw std::domain_error("cohomology requires an orbifold presentation (no torsion)");
    if (fan.n > 2) throw std::domain_error("cohomology implemented for dimension <= 2 only");
    auto bad = fan.validate();
    for (const auto& msg : bad)
        if (msg.rfind("notice:", 0) != 0)
            throw std::domain_error("cohomology requires a complete valid fan: " + msg);
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

SuppComplex supp_complex(const StackyFan& fan, const IntVec& r) {
    if (!fan.torsion.empty())
        throw std::domain_error("supp_complex requires an orbifold presentation");
    if (fan.n > 2) throw std::domain_error("supp_complex implemented for dimension <= 2 only");
    if (r.size() != fan.s()) throw std::invalid_argument("r must have one entry per ray");

    SuppComplex K;
    for (std::size_t i = 1; i <= fan.s(); ++i)
        if (r[i - 1] >= 0) K.vertices.insert(i);
    if (fan.n == 2) {
        for (const auto& cone : fan.max_cones) {
            std::size_t a = std::min(cone[0], cone[1]), b = std::max(cone[0], cone[1]);
            if (K.vertices.count(a) && K.vertices.count(b)) K.edges.insert({a, b});
        }
    }
    return K;
}

ReducedHomology reduced_homology_dims(const SuppComplex& K) {
    if (K.vertices.empty()) return {1, 0, 0};

    std::map<std::size_t, std::size_t> idx;
    for (std::size_t v : K.vertices) idx.emplace(v, idx.size());
    std::vector<std::size_t> parent(idx.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& [a, b] : K.edges) {
        std::size_t ra = find_root(parent, idx.at(a)), rb = find_root(parent, idx.at(b));
        parent[ra] = rb;
    }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < parent.size(); ++i) roots.insert(find_root(parent, i));
    Int C = roots.size();
    Int V = K.vertices.size(), E = K.edges.size();
    return {0, C - 1, E - V + C};  // cycle rank of a graph
}

Int h0(const StackyFan& fan, const LineBundle& L) {
    require_orbifold_low_dim(fan);
    const std::size_t n = fan.n, s = fan.s();
    const IntVec& k = L.k;
    std::vector<IntVec> b(s);
    for (std::size_t j = 0; j < s; ++j) b[j] = fan.B.col(j);

    if (n == 1) {
        // interval [max over b>0 of -k/b , min over b<0 of -k/b]
        bool has_lo = false, has_hi = false;
        Int lo = 0, hi = 0;
        for (std::size_t j = 0; j < s; ++j) {
            Rat bound(-k[j], b[j][0]);
            bound.canonicalize();
            Int val;
            if (b[j][0] > 0) {
                mpz_cdiv_q(val.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
                if (!has_lo || val > lo) lo = val;
                has_lo = true;
            } else {
                mpz_fdiv_q(val.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
                if (!has_hi || val < hi) hi = val;
                has_hi = true;
            }
        }
        if (!has_lo || !has_hi) throw std::domain_error("unbounded section polytope");
        return hi >= lo ? hi - lo + 1 : Int(0);
    }

    // n == 2: rational vertices from constraint pairs bound the polytope
    std::vector<std::array<Rat, 2>> verts;
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = i + 1; j < s; ++j) {
            Int det = b[i][0] * b[j][1] - b[i][1] * b[j][0];
            if (det == 0) continue;
            Rat x(-k[i] * b[j][1] + k[j] * b[i][1], det);
            Rat y(-k[j] * b[i][0] + k[i] * b[j][0], det);
            x.canonicalize();
            y.canonicalize();
            bool feasible = true;
            for (std::size_t t = 0; t < s && feasible; ++t)
                if (Rat(b[t][0]) * x + Rat(b[t][1]) * y < Rat(-k[t])) feasible = false;
            if (feasible) verts.push_back({x, y});
        }
    }
    if (verts.empty()) return 0;

    auto floor_r = [](const Rat& q) {
        Int v;
        mpz_fdiv_q(v.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        return v;
    };
    auto ceil_r = [](const Rat& q) {
        Int v;
        mpz_cdiv_q(v.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        return v;
    };
    Rat xmin = verts[0][0], xmax = verts[0][0], ymin = verts[0][1], ymax = verts[0][1];
    for (const auto& v : verts) {
        xmin = std::min(xmin, v[0]);
        xmax = std::max(xmax, v[0]);
        ymin = std::min(ymin, v[1]);
        ymax = std::max(ymax, v[1]);
    }
    Int count = 0;
    for (Int x = ceil_r(xmin); x <= floor_r(xmax); ++x) {
        for (Int y = ceil_r(ymin); y <= floor_r(ymax); ++y) {
            bool ok = true;
            for (std::size_t t = 0; t < s && ok; ++t)
                if (k[t] + b[t][0] * x + b[t][1] * y < 0) ok = false;
            if (ok) ++count;
        }
    }
    return count;
}

IntVec h_all(const StackyFan& fan, const LineBundle& L) {
    require_orbifold_low_dim(fan);
    const std::size_t n = fan.n, s = fan.s();
    const IntVec& k = L.k;
    std::vector<IntVec> b(s);
    for (std::size_t j = 0; j < s; ++j) b[j] = fan.B.col(j);

    // Certified enumeration bound. The sign pattern of r_i(m) = k_i + <m, b_i>
    // is constant on each chamber of the line arrangement <m, b_i> = -k_i.
    // Every bounded chamber lies inside the bounding box of the pairwise line
    // intersections; on and beyond that box, the support set is the half-plane
    // arc of the chamber's recession direction (possibly extended by adjacent
    // orthogonal rays), a nonempty proper arc with vanishing reduced homology.
    Int M = 0;
    for (const Int& x : k) M = std::max(M, Int(abs(x)));  // n = 1 line positions
    if (n == 1) {
        Int bmax = 0;
        for (std::size_t j = 0; j < s; ++j) bmax = std::max(bmax, Int(abs(b[j][0])));
        M += bmax;  // |x| <= |k_i / b_i| <= |k_i|; slack for floor effects
    } else {
        for (std::size_t i = 0; i < s; ++i) {
            for (std::size_t j = i + 1; j < s; ++j) {
                Int det = b[i][0] * b[j][1] - b[i][1] * b[j][0];
                if (det == 0) continue;
                for (const Int& num : {Int(-k[i] * b[j][1] + k[j] * b[i][1]),
                                       Int(-k[j] * b[i][0] + k[i] * b[j][0])}) {
                    Int bound;
                    mpz_cdiv_q(bound.get_mpz_t(), Int(abs(num)).get_mpz_t(),
                               Int(abs(det)).get_mpz_t());
                    M = std::max(M, bound);
                }
            }
        }
    }
    M += 1;

    auto r_at = [&](const IntVec& m) {
        IntVec r(s);
        for (std::size_t j = 0; j < s; ++j) r[j] = k[j] + dot(b[j], m);
        return r;
    };

    IntVec h(n + 1);
    auto visit = [&](const IntVec& m) {
        ReducedHomology rh = reduced_homology_dims(supp_complex(fan, r_at(m)));
        // h^p accumulates reduced H_{n-p-1}
        if (n == 2) {
            h[0] += rh.h_1;
            h[1] += rh.h_0;
            h[2] += rh.h_neg1;
        } else {
            h[0] += rh.h_0;
            h[1] += rh.h_neg1;
        }
    };
    if (n == 1) {
        for (Int x = -M; x <= M; ++x) visit({x});
    } else {
        for (Int x = -M; x <= M; ++x)
            for (Int y = -M; y <= M; ++y) visit({x, y});
    }
    return h;
}

IntVec ext(const PicardGroup& pic, const LineBundle& L1, const LineBundle& L2) {
    return h_all(pic.fan(), pic.sub(L2, L1));
}

}  // namespace toric
