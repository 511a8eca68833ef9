#pragma once

#include <compare>
#include <string>
#include <vector>

#include "toric/int_matrix.hpp"

namespace toric {

// Element of a finitely generated abelian group Z^f x Z/d_1 x ... x Z/d_t,
// torsion residues always reduced into [0, d_i).
struct GroupElement {
    IntVec free_part;
    IntVec torsion_part;

    bool operator==(const GroupElement&) const = default;
    std::weak_ordering operator<=>(const GroupElement&) const = default;
    std::string to_string() const;
};

// Finitely generated abelian group presented as a cokernel Z^R / colspan(M),
// normalized by Smith normal form.
class FgAbGroup {
public:
    FgAbGroup() = default;

    std::size_t free_rank() const { return free_rank_; }
    const IntVec& invariant_factors() const { return factors_; }
    std::size_t presentation_rank() const { return to_normal_.cols(); }

    // presentation coordinates (Z^R) -> normal coordinates; rows: free then torsion
    const IntMatrix& to_normal() const { return to_normal_; }
    // section of to_normal: a representative in Z^R for each normal coordinate
    const IntMatrix& from_normal() const { return from_normal_; }

    GroupElement zero() const;
    GroupElement project(const IntVec& v) const;
    IntVec representative(const GroupElement& g) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement scale(const Int& m, const GroupElement& a) const;
    bool is_zero(const GroupElement& a) const;

    // all x with m*x == t; empty when no solution exists
    std::vector<GroupElement> divide_element(const GroupElement& t, const Int& m) const;

    friend FgAbGroup cokernel(const IntMatrix& M);

private:
    std::size_t free_rank_ = 0;
    IntVec factors_;
    IntMatrix to_normal_;
    IntMatrix from_normal_;
};

FgAbGroup cokernel(const IntMatrix& M);

std::vector<GroupElement> divide_element(const FgAbGroup& G, const GroupElement& t, const Int& m);

}  // namespace toric
