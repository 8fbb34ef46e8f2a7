#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stratkit/simplicial.hpp"

namespace stratkit {

// Sparse integer matrix stored by columns.
struct SparseMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<std::pair<int, std::int64_t>>> columns;
};

struct SmithForm {
    int rank = 0;
    std::vector<std::int64_t> invariant_factors;  // nonzero diagonal, each dividing the next
};

// Exact Smith normal form over Z; throws IntegerOverflow rather than wrap.
SmithForm smith_normal_form(const SparseMatrix& m);

struct ChainComplex {
    std::vector<int> rank;               // rank of C_n
    std::vector<SparseMatrix> boundary;  // boundary[n] : C_n -> C_{n-1}; boundary[0] is 0 x rank[0]
};

// Normalized chains (non-degenerate simplices) in degrees 0..top.
ChainComplex normalized_chains(const SimplicialSet& x, int top);

// Mapping cone of the chain map induced by f : a -> b, degrees 0..top.
ChainComplex mapping_cone(const SimplicialSet& a, const SimplicialSet& b, const SimplicialMap& f,
                          int top);

struct HomologyReport {
    std::vector<std::int64_t> betti;                 // degrees 0..valid_up_to
    std::vector<std::vector<std::int64_t>> torsion;  // invariant factors > 1 per degree
    int valid_up_to = -1;

    bool operator==(const HomologyReport&) const = default;
    bool is_point() const;    // homology of a point in all reported degrees
    bool is_zero() const;     // all groups vanish
    std::string to_string() const;
};

HomologyReport homology(const ChainComplex& c, int max_deg);
HomologyReport homology(const SimplicialSet& x, int max_deg);

// True iff f induces isomorphisms H_n(a) -> H_n(b) for all n <= max_deg.
// Decided exactly: the cone is acyclic through max_deg and H_max_deg(a) and
// H_max_deg(b) are abstractly isomorphic (a surjection between isomorphic
// finitely generated abelian groups is an isomorphism).
bool induces_homology_iso(const SimplicialSet& a, const SimplicialSet& b, const SimplicialMap& f,
                          int max_deg);

}  // namespace stratkit
