#include "toric/exceptional.hpp"

#include <algorithm>
#include <stdexcept>

#include "toric/cohomology.hpp"
#include "toric/geometry.hpp"

namespace toric {

namespace {

bool any_nonzero(const IntVec& v) { return !vec_is_zero(v); }

}  // namespace

ExtTable ext_table(const PicardGroup& pic, const std::vector<LineBundle>& bundles) {
    ExtTable T;
    T.bundles = bundles;
    T.table.resize(bundles.size(), std::vector<IntVec>(bundles.size()));
    for (std::size_t i = 0; i < bundles.size(); ++i) {
        for (std::size_t j = 0; j < bundles.size(); ++j) {
            T.table[i][j] = ext(pic, bundles[i], bundles[j]);
            if (i == j) {
                IntVec expect(T.table[i][j].size());
                expect[0] = 1;
                if (T.table[i][j] != expect)
                    throw std::logic_error("line bundle failed exceptionality self-check");
            }
        }
    }
    return T;
}

std::optional<std::vector<std::size_t>> find_exceptional_ordering(const ExtTable& T, bool strong) {
    const std::size_t N = T.bundles.size();
    if (strong) {
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                if (i == j) continue;
                for (std::size_t d = 1; d < T.table[i][j].size(); ++d)
                    if (T.table[i][j][d] != 0) return std::nullopt;
            }
    }

    // nonzero Ext(L_i, L_j) forbids i from coming after j, so add edge i -> j
    std::vector<std::vector<bool>> edge(N, std::vector<bool>(N, false));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            if (i == j) continue;
            if (any_nonzero(T.table[i][j])) edge[i][j] = true;
        }
    // distinct line bundles cannot have mutually nonzero ext^0 (mutual effectivity)
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            if (T.table[i][j][0] != 0 && T.table[j][i][0] != 0 && !(T.bundles[i] == T.bundles[j]))
                throw std::logic_error("mutual ext^0 between distinct line bundles");

    // Kahn topological sort; ties broken by canonical representative order
    std::vector<std::size_t> indeg(N, 0);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (edge[i][j]) ++indeg[j];

    std::vector<std::size_t> byrep(N);
    for (std::size_t i = 0; i < N; ++i) byrep[i] = i;
    std::sort(byrep.begin(), byrep.end(),
              [&](std::size_t a, std::size_t b) { return T.bundles[a] < T.bundles[b]; });

    std::vector<bool> used(N, false);
    std::vector<std::size_t> order;
    while (order.size() < N) {
        bool found = false;
        for (std::size_t idx : byrep) {
            if (used[idx] || indeg[idx] != 0) continue;
            used[idx] = true;
            order.push_back(idx);
            for (std::size_t j = 0; j < N; ++j)
                if (edge[idx][j]) --indeg[j];
            found = true;
            break;
        }
        if (!found) return std::nullopt;  // cycle
    }
    return order;
}

FullnessProxy fullness_rank_proxy(const StackyFan& fan, const std::set<LineBundle>& collection) {
    KRank kr = k_rank(fan);
    if (!kr.boundary_flag)
        throw std::domain_error("rank formula inapplicable: a ray image lies inside the hull");
    return {Int(collection.size()) == kr.rank, kr.rank, collection.size()};
}

std::vector<std::set<LineBundle>> scan_subsets(const PicardGroup& pic,
                                               const std::set<LineBundle>& pool, std::size_t size) {
    if (pool.size() > 12) throw std::invalid_argument("subset scan pool limited to 12 bundles");
    if (size > pool.size()) return {};
    std::vector<LineBundle> items(pool.begin(), pool.end());

    // precompute the full ext table once; subsets reuse its entries
    ExtTable full = ext_table(pic, items);

    std::vector<std::set<LineBundle>> hits;
    std::vector<std::size_t> idx(size);
    auto rec = [&](auto&& self, std::size_t level, std::size_t start) -> void {
        if (level == size) {
            ExtTable sub;
            for (std::size_t i : idx) sub.bundles.push_back(items[i]);
            sub.table.resize(size, std::vector<IntVec>(size));
            for (std::size_t a = 0; a < size; ++a)
                for (std::size_t b = 0; b < size; ++b) sub.table[a][b] = full.table[idx[a]][idx[b]];
            if (find_exceptional_ordering(sub, false))
                hits.emplace_back(sub.bundles.begin(), sub.bundles.end());
            return;
        }
        for (std::size_t i = start; i < items.size(); ++i) {
            idx[level] = i;
            self(self, level + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
    return hits;
}

}  // namespace toric
