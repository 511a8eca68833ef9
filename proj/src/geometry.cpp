#include "toric/geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "toric/frobenius.hpp"

namespace toric {

namespace {

void require_nef_domain(const StackyFan& fan, const LineBundle& L) {
    if (!fan.torsion.empty()) throw std::domain_error("nefness requires an orbifold presentation");
    if (fan.n != 2) throw std::domain_error("nefness implemented for dimension 2 only");
    if (!vec_is_zero(L.l)) throw std::domain_error("nefness needs a representative with zero torsion twist");
    auto bad = fan.validate();
    for (const auto& msg : bad)
        if (msg.rfind("notice:", 0) != 0)
            throw std::domain_error("nefness requires a complete valid fan: " + msg);
}

Int cross_pt(const IntVec& o, const IntVec& a, const IntVec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// strict-turn monotone chain; returns hull vertices counterclockwise
std::vector<IntVec> convex_hull(std::vector<IntVec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<IntVec> hull(2 * pts.size());
    std::size_t m = 0;
    for (const IntVec& p : pts) {
        while (m >= 2 && cross_pt(hull[m - 2], hull[m - 1], p) <= 0) --m;
        hull[m++] = p;
    }
    std::size_t lower = m + 1;
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (m >= lower && cross_pt(hull[m - 2], hull[m - 1], *it) <= 0) --m;
        hull[m++] = *it;
    }
    hull.resize(m - 1);
    return hull;
}

bool on_segment(const IntVec& a, const IntVec& b, const IntVec& p) {
    if (cross_pt(a, b, p) != 0) return false;
    return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
           std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

}  // namespace

bool is_nef(const StackyFan& fan, const LineBundle& L) {
    require_nef_domain(fan, L);
    const std::size_t s = fan.s();

    std::vector<RayData> rays;
    for (std::size_t i = 1; i <= s; ++i) rays.push_back(fan.ray_data(i));
    auto target = [&](std::size_t i) {  // -k_i / b_i
        Rat q(-L.k[i], rays[i].b);
        q.canonicalize();
        return q;
    };

    for (const auto& cone : fan.max_cones) {
        const RayData& ri = rays[cone[0] - 1];
        const RayData& rj = rays[cone[1] - 1];
        Int det = ri.v[0] * rj.v[1] - ri.v[1] * rj.v[0];
        // m with <m, v_i> = t_i, <m, v_j> = t_j (Cramer)
        Rat ti = target(cone[0] - 1), tj = target(cone[1] - 1);
        Rat mx = (ti * rj.v[1] - tj * ri.v[1]) / det;
        Rat my = (tj * ri.v[0] - ti * rj.v[0]) / det;
        for (std::size_t t = 0; t < s; ++t) {
            if (mx * rays[t].v[0] + my * rays[t].v[1] < target(t)) return false;
        }
    }
    return true;
}

std::set<LineBundle> nef_summands(const PicardGroup& pic) {
    std::set<LineBundle> out;
    for (const LineBundle& L : stable_summands(pic)) {
        if (!vec_is_zero(L.l)) continue;  // defensive: not produced on orbifolds
        if (is_nef(pic.fan(), pic.neg(L))) out.insert(L);
    }
    return out;
}

KRank k_rank(const StackyFan& fan) {
    if (!fan.torsion.empty()) throw std::domain_error("k_rank requires an orbifold presentation");
    if (fan.n != 2) throw std::domain_error("k_rank implemented for dimension 2 only");

    std::vector<IntVec> pts;
    for (std::size_t j = 0; j < fan.s(); ++j) pts.push_back(fan.B.col(j));
    std::vector<IntVec> hull = convex_hull(pts);
    if (hull.size() < 3) throw std::domain_error("degenerate hull: fan columns are collinear");

    Int twice_area = 0;  // shoelace; equals 2! * vol exactly
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const IntVec& a = hull[i];
        const IntVec& b = hull[(i + 1) % hull.size()];
        twice_area += a[0] * b[1] - a[1] * b[0];
    }
    twice_area = abs(twice_area);

    bool boundary = true;
    for (const IntVec& p : pts) {
        bool on = false;
        for (std::size_t i = 0; i < hull.size() && !on; ++i)
            on = on_segment(hull[i], hull[(i + 1) % hull.size()], p);
        if (!on) {
            boundary = false;
            break;
        }
    }
    return {twice_area, boundary};
}

}  // namespace toric
