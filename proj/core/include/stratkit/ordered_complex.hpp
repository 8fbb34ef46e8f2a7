#pragma once

#include <functional>
#include <map>
#include <vector>

#include "stratkit/simplicial.hpp"

namespace stratkit {

// A simplicial set whose simplices are determined by their vertices: the
// non-degenerate simplices are strictly increasing vertex tuples (for a fixed
// vertex order) closed under taking subtuples. Nerves of posets, standard
// simplices, barycentric and stratified subdivisions of simplices are of this
// kind. Vertex v always has nd id v.
class OrderedComplex {
public:
    OrderedComplex() = default;
    // `simplices` may omit faces; the downward closure is added.
    OrderedComplex(int num_vertices, const std::vector<std::vector<int>>& simplices);

    const SimplicialSet& set() const { return set_; }
    int num_vertices() const { return num_vertices_; }
    const std::vector<int>& tuple(int id) const { return tuples_.at(id); }
    // nd id of a strictly increasing tuple, or -1.
    int find(const std::vector<int>& strictly_increasing) const;
    // Normal form of a weakly increasing tuple; nd = -1 if not a simplex.
    SimplexRef ref(const std::vector<int>& weakly_increasing) const;

    // Map into `target` induced by a vertex function; throws Malformed if a
    // simplex is not sent to a simplex.
    SimplicialMap vertex_map(const OrderedComplex& target, const std::function<int(int)>& f) const;
    // Same, but returns false instead of throwing.
    bool try_vertex_map(const OrderedComplex& target, const std::function<int(int)>& f,
                        SimplicialMap* out) const;

private:
    int num_vertices_ = 0;
    SimplicialSet set_;
    std::vector<std::vector<int>> tuples_;
    std::map<std::vector<int>, int> index_;
};

// Standard simplex Delta^n.
OrderedComplex standard_simplex_complex(int n);
// Nerve of the product poset [a] x [b]; vertex (i, j) has index i * (b + 1) + j.
OrderedComplex grid_complex(int a, int b);
// Barycentric subdivision of Delta^n: vertices are non-empty subsets of [n]
// (bitmasks), ordered by (size, mask); `masks[v]` gives the subset of vertex v.
struct SdSimplex {
    OrderedComplex complex;
    std::vector<unsigned> masks;
    std::map<unsigned, int> vertex_of_mask;
};
const SdSimplex& sd_simplex(int n);

// Subsets of [n] as bitmasks: image under a monotone map, and the increasing
// list of members (the face inclusion the subset names).
unsigned image_mask(unsigned mask, const Op& alpha);
Op mask_to_op(unsigned mask);

}  // namespace stratkit
