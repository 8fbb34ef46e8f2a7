#pragma once

#include <cstdint>
#include <vector>

#include "stratkit/constructions.hpp"
#include "stratkit/diagrams.hpp"
#include "stratkit/enumerate.hpp"
#include "stratkit/stratified.hpp"

namespace stratkit {

// Link_I(K): the part of sd(K) lying over the barycentre of Delta^I in
// sd(N(P)), i.e. the simplices all of whose vertices are barycentres of
// simplices with regularised flag I.
struct Link {
    Flag flag;
    Subdivision sd;
    Subcomplex sub;

    const SimplicialSet& set() const { return sub.set; }
};
Link link(const StratifiedSet& k, const Flag& i);
// Induced map Link_I(K) -> Link_I(L) of a stratified map f.
SimplicialMap link_map(const StratifiedSet& k, const Link& lk, const StratifiedSet& l, const Link& ll,
                       const SimplicialMap& f);

// HoLink_I(K) truncated at `truncation`: n-simplices are the stratified maps
// Delta^I x Delta^n -> K for n <= truncation, operators by precomposition.
struct Holink {
    Flag flag;
    int truncation = 0;
    std::vector<std::vector<SimplicialMap>> level;  // sorted
    LevelwiseSet lw;

    const SimplicialSet& set() const { return lw.set; }
    int index(int n, const SimplicialMap& h) const;  // -1 if absent
};
// Delta^I x Delta^n stratified through the first factor; vertex (x, y) has
// index x * (n + 1) + y.
StratifiedSet flag_cylinder(const PosetPtr& p, const Flag& i, int n);
// (x, y) -> (alpha_x(x), alpha_y(y)) from [a_src] x [n_src] to [a_tgt] x [n_tgt].
SimplicialMap cylinder_map(int a_src, int n_src, int a_tgt, int n_tgt, const Op& alpha_x, const Op& alpha_y);
Holink holink(const StratifiedSet& k, const Flag& i, int truncation, std::uint64_t budget = kDefaultBudget);
// Post-composition with f : K -> L.
SimplicialMap holink_map(const Holink& a, const Holink& b, const StratifiedSet& l, const SimplicialMap& f);
// Restriction HoLink_{I'}(K) -> HoLink_I(K) along I subset I'.
SimplicialMap holink_restriction(const Holink& big, const Holink& small, const StratifiedSet& k);

// D_P(K): I -> HoLink_I(K) with restrictions.
struct HolinkDiagram {
    Diagram diagram;
    std::vector<Holink> holinks;
};
HolinkDiagram diagram_d(const StratifiedSet& k, int truncation, std::uint64_t budget = kDefaultBudget);
DiagramMap diagram_d_map(const HolinkDiagram& a, const HolinkDiagram& b, const StratifiedSet& l,
                         const SimplicialMap& f);

}  // namespace stratkit
