#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "stratkit/enumerate.hpp"
#include "stratkit/stratified.hpp"
#include "stratkit/subdivision.hpp"

namespace stratkit {

// Ex_P(K) (or Ex_P^naiv(K)) truncated at `truncation`: the J-simplices are
// the stratified maps sd_P(Delta^J) -> K (resp. sd_P^naiv(Delta^J) -> K),
// operators act by precomposition with sd_P of coface and codegeneracy maps.
struct ExSet {
    bool naive = false;
    int truncation = 0;
    std::vector<std::vector<std::pair<Flag, SimplicialMap>>> level;  // sorted
    LevelwiseSet lw;
    StratifiedSet set;

    int index(int n, const Flag& j, const SimplicialMap& x) const;  // -1 if absent
    // Normal form of a level element.
    SimplexRef ref(int n, const Flag& j, const SimplicialMap& x) const;
    const std::pair<Flag, SimplicialMap>& element(int nd) const;
};

ExSet ex_p(const StratifiedSet& k, int truncation, SdPCache& cache, std::uint64_t budget = kDefaultBudget);
ExSet ex_p_naiv(const StratifiedSet& k, int truncation, std::uint64_t budget = kDefaultBudget);
// Ex_P applied `depth` times, each truncated at `truncation`.
StratifiedSet ex_p_iterated(const StratifiedSet& k, int depth, int truncation,
                            std::uint64_t budget = kDefaultBudget);

// Characteristic map Delta^n -> K of a non-degenerate simplex.
SimplicialMap characteristic_map(const SimplicialSet& k, int nd);

// iota : K -> Ex_P(K), sigma -> sigma o lv_P (K truncated like the target).
SimplicialMap iota(const StratifiedSet& k, const ExSet& ex, SdPCache& cache);
// K -> Ex_P^naiv(K), sigma -> sigma o l.v.
SimplicialMap iota_naiv(const StratifiedSet& k, const ExSet& ex);
// Ex_P^naiv(K) -> Ex_P(K), x -> x o t_J.
SimplicialMap naive_to_ex(const StratifiedSet& k, const ExSet& naive, const ExSet& ex, SdPCache& cache);

// The restriction of K to dimensions <= d (all of K when d >= dim K).
StratifiedInclusion skeleton(const StratifiedSet& k, int d);

}  // namespace stratkit
