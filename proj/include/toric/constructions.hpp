#pragma once

#include <string>
#include <vector>

#include "toric/picard.hpp"
#include "toric/stacky_fan.hpp"

namespace toric {

// Morphism of toric stacks given by lattice data. C maps source ray
// coordinates to target ray coordinates; D the ambient lattices; E the
// torsion generators; F is the homotopy making D*B - B'*C = A'*F exact.
struct ToricMorphism {
    StackyFan source;
    StackyFan target;
    IntMatrix C;  // s_tgt x s_src
    IntMatrix D;  // (n_tgt + r_tgt) x (n_src + r_src)
    IntMatrix E;  // r_tgt x r_src
    IntMatrix F;  // r_tgt x s_src

    // every violated invariant (shapes, commutativity, cone conditions);
    // cone conditions are checked for dimension <= 2 only
    std::vector<std::string> validate() const;
    bool is_valid() const { return validate().empty(); }
};

ToricMorphism identity_morphism(const StackyFan& fan);
ToricMorphism frobenius_morphism(const StackyFan& fan, const Int& m);

// pullback of the target bundle O(k'D')_{l'} along phi:
// k = ^tC k' + ^tF l', l = ^tE l'; source_pic must present phi.source
LineBundle pullback(const ToricMorphism& phi, const PicardGroup& source_pic,
                    const LineBundle& L_target);

struct FanWithMorphism {
    StackyFan fan;       // the constructed stack
    ToricMorphism phi;   // constructed stack -> input stack
};

// root stack along the toric divisors: B'' = B * diag(c), same cones
FanWithMorphism root_stack_divisors(const StackyFan& fan, const IntVec& c);

// root stack along line bundles: extends the torsion part by one generator
// per bundle, then renormalizes the presentation
struct RootStackResult {
    StackyFan fan;
    ToricMorphism phi;    // root stack -> base
    IntMatrix l_to_k;     // transport of old twist coordinates (r' of them)
    IntMatrix l_to_l;

    // the class of the k-th new gerbe generator g*_{r+k} (0-based k) on fan
    LineBundle gerbe_generator(const PicardGroup& root_pic, std::size_t k) const;
};
RootStackResult root_stack_line_bundles(const StackyFan& fan,
                                        const std::vector<LineBundle>& bundles, const IntVec& e);

// drop the torsion part of N; phi goes from the input stack to the orbifold
struct RigidificationResult {
    StackyFan fan;       // the rigidified orbifold
    ToricMorphism phi;   // input stack -> orbifold
};
RigidificationResult rigidification(const StackyFan& fan);

// closed substack for a nonzero cone tau (1-based ray indices)
struct SubstackResult {
    StackyFan fan;
    std::vector<std::size_t> divisor_rays;  // rays of the ambient fan kept as divisors
    std::vector<std::size_t> tau;
    IntMatrix l_to_k;  // transport of (k_tau-complement, l) twist coordinates
    IntMatrix l_to_l;
};
SubstackResult substack(const StackyFan& fan, const std::vector<std::size_t>& tau);

// restriction of O(kD)_l on the ambient stack to the substack, as a class
LineBundle restrict_bundle(const SubstackResult& sub, const PicardGroup& sub_pic, const IntVec& k,
                           const IntVec& l);

// weighted blow-up at a 2-cone (pair of 1-based ray indices) of an orbifold
struct BlowupResult {
    StackyFan fan;
    ToricMorphism phi;  // blow-up -> base
    IntVec v_new;       // inserted primitive ray direction
    Int m;              // m v_new = sum h_i v_i with coprime h_i
    IntVec h;           // (h_1, h_2)
    Int h_scale;        // minimal h with h*h_i/b_i integral
    Int b_new;          // = h_scale * m, multiplicity of the new ray
    IntVec c;           // (c_1, c_2) = h * h_i / b_i
};
BlowupResult weighted_blowup(const StackyFan& fan, const std::vector<std::size_t>& sigma,
                             const IntVec& v_new);

// resolve all singular coarse cones of a complete 2D orbifold by repeated
// weighted blow-ups; steps are in application order
struct ResolutionResult {
    StackyFan fan;  // final fan, all coarse cones unimodular
    std::vector<BlowupResult> steps;
};
ResolutionResult resolve_2d(const StackyFan& fan);

}  // namespace toric
