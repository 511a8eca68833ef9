#include "toric/picard.hpp"

#include <sstream>
#include <stdexcept>

namespace toric {

PicardGroup::PicardGroup(const StackyFan& fan) : fan_(fan) {
    auto bad = fan_.validate();
    for (const auto& msg : bad)
        if (msg.rfind("notice:", 0) != 0) throw std::invalid_argument("invalid stacky fan: " + msg);

    relations_ = fan_.B.hcat(fan_.A()).transpose();  // (s+r) x (n+r)
    group_ = cokernel(relations_);
    hermite_ = column_hermite_form(relations_);

    // orient the free coordinate (rank 1 only) so effective divisor classes
    // pair nonnegatively; the first nonzero divisor class fixes the sign
    if (group_.free_rank() == 1) {
        const std::size_t s = fan_.s();
        int sign = 0;
        bool consistent = true;
        for (std::size_t i = 0; i < s; ++i) {
            IntVec e(s + fan_.r());
            e[i] = 1;
            Int d = group_.project(e).free_part[0];
            if (d == 0) continue;
            int sg = d > 0 ? 1 : -1;
            if (sign == 0)
                sign = sg;
            else if (sign != sg)
                consistent = false;
        }
        if (consistent && sign != 0) degree_sign_ = sign;
    }
}

IntVec PicardGroup::canonicalize(const IntVec& kl) const {
    return reduce_by_hermite(hermite_, kl);
}

LineBundle PicardGroup::bundle(const IntVec& k, const IntVec& l) const {
    if (k.size() != fan_.s()) throw std::invalid_argument("k must have one entry per ray");
    if (l.size() != fan_.r()) throw std::invalid_argument("l must have one entry per torsion factor");
    IntVec kl = k;
    kl.insert(kl.end(), l.begin(), l.end());
    IntVec w = canonicalize(kl);
    LineBundle L;
    L.k.assign(w.begin(), w.begin() + fan_.s());
    L.l.assign(w.begin() + fan_.s(), w.end());
    L.cls = group_.project(kl);
    return L;
}

LineBundle PicardGroup::bundle(const std::vector<long>& k, const std::vector<long>& l) const {
    IntVec lv = to_intvec(l);
    lv.resize(fan_.r());
    return bundle(to_intvec(k), lv);
}

LineBundle PicardGroup::trivial() const {
    return bundle(IntVec(fan_.s()), IntVec(fan_.r()));
}

LineBundle PicardGroup::canonical_class() const {
    return bundle(IntVec(fan_.s(), Int(-1)), IntVec(fan_.r()));
}

LineBundle PicardGroup::add(const LineBundle& a, const LineBundle& b) const {
    return bundle(vec_add(a.k, b.k), vec_add(a.l, b.l));
}

LineBundle PicardGroup::sub(const LineBundle& a, const LineBundle& b) const {
    return bundle(vec_sub(a.k, b.k), vec_sub(a.l, b.l));
}

LineBundle PicardGroup::neg(const LineBundle& a) const {
    return bundle(vec_neg(a.k), vec_neg(a.l));
}

LineBundle PicardGroup::scale(const Int& m, const LineBundle& a) const {
    return bundle(vec_scaled(a.k, m), vec_scaled(a.l, m));
}

LineBundle PicardGroup::from_class(const GroupElement& cls) const {
    IntVec w = group_.representative(cls);
    IntVec k(w.begin(), w.begin() + fan_.s());
    IntVec l(w.begin() + fan_.s(), w.end());
    return bundle(k, l);
}

Int PicardGroup::degree(const LineBundle& L) const {
    if (!degree_defined())
        throw std::domain_error("degree needs Picard free rank 1 with a positive generator");
    return Int(degree_sign_) * L.cls.free_part[0];
}

Int PicardGroup::generic_stabilizer_order() const {
    return toric::generic_stabilizer_order(fan_);
}

std::string PicardGroup::render(const LineBundle& L) const {
    auto append_terms = [](std::ostringstream& os, const IntVec& coeffs, const char* sym,
                           bool& first) {
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            const Int& c = coeffs[i];
            if (c == 0) continue;
            Int a = abs(c);
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (a != 1) os << a.get_str();
            os << sym << (i + 1);
        }
    };
    std::ostringstream kpart, lpart;
    bool kfirst = true, lfirst = true;
    append_terms(kpart, L.k, "D", kfirst);
    append_terms(lpart, L.l, "g", lfirst);
    std::string ks = kpart.str(), ls = lpart.str();
    if (ks.empty() && ls.empty()) return "O";
    std::string out = "O(" + (ks.empty() ? "0" : ks);
    if (!ls.empty()) out += "; " + ls;
    out += ")";
    return out;
}

Int generic_stabilizer_order(const StackyFan& fan) {
    Int p = 1;
    for (const Int& a : fan.torsion) p *= a;
    return p;
}

}  // namespace toric
