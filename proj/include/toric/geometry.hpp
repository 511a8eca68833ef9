#pragma once

#include <set>

#include "toric/picard.hpp"

namespace toric {

// nefness of the Q-divisor sum(k_i/b_i) D_i via support-function convexity
bool is_nef(const StackyFan& fan, const LineBundle& L);

// D^nef: the stable summands O(D) whose -D is nef
std::set<LineBundle> nef_summands(const PicardGroup& pic);

// rank of the Grothendieck group: n! * vol(conv hull of the B columns);
// boundary_flag is true when every column lies on the hull boundary
struct KRank {
    Int rank;
    bool boundary_flag;
};
KRank k_rank(const StackyFan& fan);

}  // namespace toric
