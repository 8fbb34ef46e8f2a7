#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stratkit/simplicial.hpp"

namespace stratkit {

// Isomorphism search: colour refinement on the face structure (a canonical
// invariant used to reject quickly and to restrict candidates), then
// backtracking. Optional per-simplex colours (e.g. encoded flags) must be
// preserved. Returns the isomorphism a -> b if one exists.
std::optional<SimplicialMap> find_isomorphism(const SimplicialSet& a, const SimplicialSet& b,
                                              const std::vector<std::int64_t>& colour_a = {},
                                              const std::vector<std::int64_t>& colour_b = {},
                                              std::uint64_t budget = kDefaultBudget);

// Colour-refinement invariant; equal for isomorphic inputs.
std::uint64_t canonical_hash(const SimplicialSet& x, const std::vector<std::int64_t>& colour = {});

}  // namespace stratkit
