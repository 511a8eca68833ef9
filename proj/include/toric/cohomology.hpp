#pragma once

#include <set>
#include <utility>

#include "toric/picard.hpp"

namespace toric {

// Support subcomplex of the (at most 1-dimensional) fan boundary complex:
// the rays i with r_i >= 0, and the cone edges both of whose rays survive.
struct SuppComplex {
    std::set<std::size_t> vertices;                       // 1-based ray indices
    std::set<std::pair<std::size_t, std::size_t>> edges;  // ordered pairs, i < j

    bool operator==(const SuppComplex&) const = default;
};

struct ReducedHomology {
    Int h_neg1, h_0, h_1;  // dim of reduced H_{-1}, H_0, H_1
};

SuppComplex supp_complex(const StackyFan& fan, const IntVec& r);
ReducedHomology reduced_homology_dims(const SuppComplex& K);

// h^0 by direct counting of lattice points m with k_i + <m, beta_i> >= 0
Int h0(const StackyFan& fan, const LineBundle& L);

// all cohomology dimensions (h^0..h^n) via the support-complex homology sum,
// with a certified enumeration box (throws if certification fails)
IntVec h_all(const StackyFan& fan, const LineBundle& L);

// Ext^i(L1, L2) = H^i(L2 - L1)
IntVec ext(const PicardGroup& pic, const LineBundle& L1, const LineBundle& L2);

}  // namespace toric
