#pragma once

#include <map>
#include <set>

#include "toric/picard.hpp"

namespace toric {

// F_* L = direct sum of line bundles with multiplicities.
using SummandMultiset = std::map<LineBundle, Int>;

// character-side decomposition: enumerate j in [0, m-1]^s and divide classes by m
SummandMultiset pushforward_by_characters(const PicardGroup& pic, const LineBundle& L, const Int& m);

// lattice-side decomposition: u in [0, m-1]^{n+r}, floor((k + tB u)/m), (l + tA u)/m
std::set<LineBundle> pushforward_by_lattice(const PicardGroup& pic, const LineBundle& L, const Int& m);

// certified grid denominator for which pushforward_by_lattice(O, m) is stable
Int stable_denominator(const StackyFan& fan);

// the stabilized summand set D_X = { O(floor(tB u) D)_{tA u} : u in [0,1)^{n+r} }
std::set<LineBundle> stable_summands(const PicardGroup& pic);

// for fans whose bottom r rows of B vanish: D_X equals the union over torsion
// twists of the pulled-back summand set of the rigidified (torsion-free) fan
bool rootstack_summand_decomposition_check(const PicardGroup& pic);

}  // namespace toric
