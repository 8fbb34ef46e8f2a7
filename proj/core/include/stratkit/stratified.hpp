#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stratkit/enumerate.hpp"
#include "stratkit/poset.hpp"
#include "stratkit/simplicial.hpp"

namespace stratkit {

// A simplicial set over N(P): every non-degenerate n-simplex carries a flag of
// length n + 1. Since N(P) is the nerve of a poset, a flag is the list of
// strata of the simplex's vertices.
struct StratifiedSet {
    PosetPtr poset;
    SimplicialSet carrier;
    std::vector<Flag> flags;  // per nd simplex

    int size() const { return carrier.size(); }
    int stratum_of_vertex(int v) const { return flags.at(v).front(); }
    // Flag of an arbitrary simplex; degeneracies repeat entries.
    Flag flag_of(const SimplexRef& x) const;
    // Throws Malformed unless flags are weakly increasing, have the right
    // length and are compatible with every face.
    void validate() const;
};

// Carrier plus vertex strata; flags are derived from the vertices.
StratifiedSet stratify_by_vertices(PosetPtr p, SimplicialSet carrier, const std::vector<int>& vertex_stratum);
// Pulls back a stratification along a simplicial map (carrier -> base).
StratifiedSet pull_back(const StratifiedSet& base, SimplicialSet carrier, const SimplicialMap& to_base);

struct StratifiedInclusion {
    StratifiedSet sub;
    SimplicialMap inclusion;
};

StratifiedSet standard_simplex(PosetPtr p, const Flag& j);
StratifiedInclusion boundary(PosetPtr p, const Flag& j);
StratifiedInclusion horn(PosetPtr p, const Flag& j, int k);
StratifiedSet empty_stratified(PosetPtr p);
StratifiedInclusion stratified_subcomplex(const StratifiedSet& k, const std::vector<char>& keep);

// p_k repeats an adjacent entry.
bool is_admissible(const Flag& j, int k);
// The degeneracy form: J = s_k J' or J = s_{k-1} J' for some flag J'.
bool is_admissible_by_degeneracy(const Flag& j, int k);

// Simplices whose flag is constant at p.
StratifiedInclusion stratum(const StratifiedSet& k, int p);

// K x S stratified through the first factor.
struct StratifiedProduct {
    StratifiedSet set;
    SimplicialMap pr1, pr2;
};
StratifiedProduct stratified_product(const StratifiedSet& k, const SimplicialSet& s);

// Nerve of P truncated at dim_bound, tautologically stratified. Vertex v is
// the element of rank v.
StratifiedSet nerve(PosetPtr p, int dim_bound);

bool is_stratified_map(const StratifiedSet& k, const StratifiedSet& l, const SimplicialMap& f);
SimplicialMap stratified_identity(const StratifiedSet& k);

std::vector<SimplicialMap> enumerate_stratified_maps(const StratifiedSet& k, const StratifiedSet& l,
                                                     std::uint64_t budget = kDefaultBudget);

// [K, L]_P: stratified maps modulo the equivalence relation generated by
// elementary homotopies K x Delta^1 -> L, in either direction.
struct HomotopyClasses {
    std::vector<SimplicialMap> maps;  // sorted
    std::vector<int> class_of;
    int num_classes = 0;

    int index_of(const SimplicialMap& f) const;  // -1 if absent
};
HomotopyClasses homotopy_classes(const StratifiedSet& k, const StratifiedSet& l,
                                 std::uint64_t budget = kDefaultBudget);

// Searches for g : L -> K with g f ~ id_K and f g ~ id_L; returns g.
std::optional<SimplicialMap> stratified_homotopy_inverse(const StratifiedSet& k, const StratifiedSet& l,
                                                         const SimplicialMap& f,
                                                         std::uint64_t budget = kDefaultBudget);
bool is_stratified_homotopy_equivalence(const StratifiedSet& k, const StratifiedSet& l,
                                        const SimplicialMap& f, std::uint64_t budget = kDefaultBudget);

// Stratified isomorphism (flags preserved).
std::optional<SimplicialMap> find_stratified_isomorphism(const StratifiedSet& a, const StratifiedSet& b,
                                                         std::uint64_t budget = kDefaultBudget);

}  // namespace stratkit
