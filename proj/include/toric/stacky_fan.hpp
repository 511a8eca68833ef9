#pragma once

#include <string>
#include <vector>

#include "toric/abelian.hpp"
#include "toric/int_matrix.hpp"

namespace toric {

struct RayData {
    std::size_t index;  // 1-based
    IntVec v;           // primitive direction in Z^n
    Int b;              // multiplicity, b*v = free projection of the B column
};

// Stacky fan in N = Z^n + Z/a_1 + ... + Z/a_r, presented with A = [0; diag(a)].
struct StackyFan {
    std::size_t n = 0;
    IntVec torsion;  // a_1..a_r, each >= 2
    IntMatrix B;     // (n+r) x s
    std::vector<std::vector<std::size_t>> max_cones;  // 1-based ray index sets

    std::size_t r() const { return torsion.size(); }
    std::size_t s() const { return B.cols(); }
    IntMatrix A() const;

    // free projection of ray column i (1-based), length n
    IntVec ray_projection(std::size_t i) const;
    RayData ray_data(std::size_t i) const;

    // every invariant violation, empty when valid
    std::vector<std::string> validate() const;
    bool is_valid() const { return validate().empty(); }
    bool is_orbifold() const { return torsion.empty(); }

    // rays sorted counterclockwise starting from the angularly smallest (n == 2)
    std::vector<std::size_t> cyclic_ray_order() const;

    bool operator==(const StackyFan&) const = default;
};

StackyFan projective_plane();
StackyFan weighted_projective(const std::vector<long>& weights);

// Exact 2D direction comparison: counterclockwise order starting from angle 0.
// Returns true when a comes strictly before b.
bool angle_less(const IntVec& a, const IntVec& b);
Int cross2(const IntVec& a, const IntVec& b);

// Re-presents N = coker(A0) (A0 of full column rank) with the canonical
// A = [0; diag(a)] shape. l_to_k/l_to_l transport old (k, l0) line-bundle
// coordinates: k_new = k + l_to_k * l0, l_new = l_to_l * l0.
struct NormalizedPresentation {
    StackyFan fan;
    IntMatrix l_to_k;  // s x r0
    IntMatrix l_to_l;  // r x r0

    // change-of-basis data from the Smith form of A0 (U*A0*V = S), for
    // transporting morphism matrices onto the normalized presentation
    IntMatrix U, Uinv, V;
    std::vector<std::size_t> free_rows, torsion_rows, dead_rows;
};

NormalizedPresentation normalize_presentation(const IntMatrix& A0, const IntMatrix& B0,
                                              std::vector<std::vector<std::size_t>> max_cones);

}  // namespace toric
