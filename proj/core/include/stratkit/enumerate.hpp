#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "stratkit/simplicial.hpp"

namespace stratkit {

struct EnumerateOptions {
    std::uint64_t budget = kDefaultBudget;
    // Restricts where each source vertex may go (stratum preservation).
    std::function<bool(int src_vertex, int tgt_vertex)> vertex_ok;
    // Images fixed in advance (relative enumeration).
    std::map<int, SimplexRef> fixed;
};

// All simplicial maps x -> y by backtracking over the non-degenerate
// simplices of x, each placed once its vertices are placed. Results are in a
// deterministic order. Throws BudgetExceeded once more than `budget`
// candidates have been examined.
std::vector<SimplicialMap> enumerate_maps(const SimplicialSet& x, const SimplicialSet& y,
                                          const EnumerateOptions& opts = {});

// A truncated simplicial set given degreewise: level n has count[n] elements,
// with face and degeneracy functions on indices. Produces the non-degenerate
// representation and the normal form of every element.
struct LevelData {
    std::vector<int> count;
    std::function<int(int n, int x, int i)> face;
    std::function<int(int n, int x, int j)> degeneracy;  // only called for n < top
};
struct LevelwiseSet {
    SimplicialSet set;
    std::vector<std::vector<SimplexRef>> ref;  // ref[n][x]
    std::vector<std::pair<int, int>> origin;   // nd id -> (n, x)
};
LevelwiseSet from_levels(const LevelData& data);

}  // namespace stratkit
