#pragma once

#include <optional>
#include <set>
#include <vector>

#include "toric/picard.hpp"

namespace toric {

// pairwise Ext dimensions between a fixed list of line bundles
struct ExtTable {
    std::vector<LineBundle> bundles;
    std::vector<std::vector<IntVec>> table;  // table[i][j] = ext^*(L_i, L_j)
};

ExtTable ext_table(const PicardGroup& pic, const std::vector<LineBundle>& bundles);

// ordering so that Ext^*(L_k, L_j) = 0 for k > j; strong additionally requires
// all off-diagonal ext^i with i != 0 to vanish
std::optional<std::vector<std::size_t>> find_exceptional_ordering(const ExtTable& T, bool strong);

// necessary-only fullness proxy: collection size vs rank of the K-group
struct FullnessProxy {
    bool passes;
    Int k_rank;
    std::size_t size;
};
FullnessProxy fullness_rank_proxy(const StackyFan& fan, const std::set<LineBundle>& collection);

// all size-subsets of the pool admitting a (non-strong) exceptional ordering
std::vector<std::set<LineBundle>> scan_subsets(const PicardGroup& pic,
                                               const std::set<LineBundle>& pool, std::size_t size);

}  // namespace toric
