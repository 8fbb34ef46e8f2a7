#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stratkit/homology.hpp"
#include "stratkit/poset.hpp"
#include "stratkit/simplicial.hpp"
#include "stratkit/stratified.hpp"

namespace stratkit {

// A presheaf of finite simplicial sets on the regular flags of P ordered by
// inclusion. Values are indexed like regular_flags(P); a restriction is
// stored for every strict inclusion small < big, as a map big -> small.
struct Diagram {
    PosetPtr poset;
    std::vector<Flag> flags;
    std::vector<SimplicialSet> values;
    std::map<std::pair<int, int>, SimplicialMap> restriction;  // (small, big)
    // Truncation dimension of the values, or -1 when exact.
    int truncation = -1;

    int index_of(const Flag& f) const;  // -1 if not a regular flag
    const SimplicialMap& restrict_map(int small, int big) const { return restriction.at({small, big}); }
    // Throws Malformed unless restrictions are simplicial and compose.
    void validate() const;
};

// Empty diagram with all flag slots present.
Diagram empty_diagram(PosetPtr p);

// A natural transformation, one component per flag.
struct DiagramMap {
    std::vector<SimplicialMap> component;
};
bool is_natural(const Diagram& f, const Diagram& g, const DiagramMap& m);
DiagramMap identity_diagram_map(const Diagram& f);

struct CofibrancyReport {
    bool cofibrant = true;
    std::string certificate;  // first violated instance
};
// Condition (1): every restriction is a monomorphism. Condition (2): for
// flags I1, I2 inside a common flag, F(I1) and F(I2) meet (inside the value
// at any common refinement) exactly in the image of F(I1 u I2); flags with
// no common refinement impose nothing.
CofibrancyReport is_cofibrant(const Diagram& f);

// S^I: S at every subflag of I, empty elsewhere.
Diagram generator(PosetPtr p, const SimplicialSet& s, const Flag& i);

// Left Kan extension along (I, n) -> Delta^I x Delta^n.
struct CpResult {
    StratifiedSet set;
    // nd simplex -> (flag index, nd simplex of the value) whose cell created it.
    std::vector<std::pair<int, int>> cell;
};
CpResult c_p(const Diagram& f);

struct LevelVerdict {
    Flag flag;
    bool pi0_bijective = false;
    bool homology_iso = false;
    HomologyReport source, target;
    bool passes() const { return pi0_bijective && homology_iso; }
};
struct LevelwiseReport {
    std::vector<LevelVerdict> levels;
    bool passes() const;
    std::optional<Flag> certificate() const;  // first failing flag
};
LevelwiseReport levelwise_compare(const Diagram& f, const Diagram& g, const DiagramMap& m, int max_deg);

// pi_0 bijectivity of a map.
bool pi0_bijective(const SimplicialSet& a, const SimplicialSet& b, const SimplicialMap& f);

}  // namespace stratkit
