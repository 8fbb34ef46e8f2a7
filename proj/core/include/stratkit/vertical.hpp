#pragma once

#include <optional>
#include <vector>

#include "stratkit/constructions.hpp"
#include "stratkit/diagrams.hpp"
#include "stratkit/stratified.hpp"

namespace stratkit {

// A simplicial set with a regular flag on every non-degenerate simplex,
// growing along faces: label(tau) is contained in label(sigma) whenever sigma
// is a face of tau.
struct LabelledSet {
    PosetPtr poset;
    SimplicialSet carrier;
    std::vector<Flag> labels;

    void validate() const;
};

// V(S): the union of Im(sigma) x Delta^{label(sigma)} inside S x N(P),
// stratified through N(P). `embedding` is the inclusion into the product and
// `base` its first projection.
struct Verticalization {
    StratifiedSet set;
    Product ambient;
    SimplicialMap embedding;
    SimplicialMap base;
};
Verticalization verticalize(const LabelledSet& s);

// sd(K) labelled by the regularised flag of the barycentre of the first
// vertex of each simplex.
struct LabelledSubdivision {
    LabelledSet labelled;
    Subdivision sd;
};
LabelledSubdivision label_subdivision(const StratifiedSet& k);

// U(S)(I) = simplices whose label contains I.
Diagram u_functor(const LabelledSet& s);
// Inverse of U on cofibrant diagrams; throws NotCofibrant otherwise.
LabelledSet diagram_to_labelled(const Diagram& f);

bool is_label_preserving(const LabelledSet& a, const LabelledSet& b, const SimplicialMap& f);
std::optional<SimplicialMap> find_labelled_isomorphism(const LabelledSet& a, const LabelledSet& b,
                                                       std::uint64_t budget = kDefaultBudget);

// A stratified map between verticalizations is vertical when it descends to
// the bases; the base map is unique and returned.
std::optional<SimplicialMap> vertical_base_map(const Verticalization& a, const LabelledSet& sa,
                                               const Verticalization& b, const LabelledSet& sb,
                                               const SimplicialMap& f);
bool is_vertical_map(const Verticalization& a, const LabelledSet& sa, const Verticalization& b,
                     const LabelledSet& sb, const SimplicialMap& f);

}  // namespace stratkit
