#pragma once

#include <compare>
#include <string>
#include <vector>

#include "toric/abelian.hpp"
#include "toric/stacky_fan.hpp"

namespace toric {

// Line bundle O(kD)_l, stored with the canonical coset representative (k, l).
struct LineBundle {
    IntVec k;          // length s
    IntVec l;          // length r
    GroupElement cls;  // class in DG(beta)

    bool operator==(const LineBundle& o) const { return k == o.k && l == o.l; }
    std::weak_ordering operator<=>(const LineBundle& o) const {
        if (auto c = k <=> o.k; c != 0) return c;
        return l <=> o.l;
    }
};

// Pic X = DG(beta) = coker ^t(B|A), with Hermite-reduced canonical representatives.
class PicardGroup {
public:
    explicit PicardGroup(const StackyFan& fan);

    const StackyFan& fan() const { return fan_; }
    const FgAbGroup& group() const { return group_; }
    const IntMatrix& relation_basis() const { return relations_; }

    LineBundle bundle(const IntVec& k, const IntVec& l) const;
    LineBundle bundle(const std::vector<long>& k, const std::vector<long>& l = {}) const;
    LineBundle trivial() const;
    LineBundle canonical_class() const;

    LineBundle add(const LineBundle& a, const LineBundle& b) const;
    LineBundle sub(const LineBundle& a, const LineBundle& b) const;
    LineBundle neg(const LineBundle& a) const;
    LineBundle scale(const Int& m, const LineBundle& a) const;
    LineBundle from_class(const GroupElement& cls) const;

    // degree against the positive generator; requires free rank 1
    Int degree(const LineBundle& L) const;
    bool degree_defined() const { return group_.free_rank() == 1 && degree_sign_ != 0; }

    Int generic_stabilizer_order() const;

    std::string render(const LineBundle& L) const;

private:
    StackyFan fan_;
    FgAbGroup group_;
    IntMatrix relations_;  // (s+r) x (n+r), columns span the relation lattice
    IntMatrix hermite_;    // column Hermite form of the relation lattice
    int degree_sign_ = 0;  // orientation of the free coordinate, 0 when undefined

    IntVec canonicalize(const IntVec& kl) const;
};

Int generic_stabilizer_order(const StackyFan& fan);

}  // namespace toric
