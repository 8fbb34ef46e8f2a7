#pragma once

#include <functional>
#include <map>
#include <vector>

#include "stratkit/ordered_complex.hpp"
#include "stratkit/simplicial.hpp"

namespace stratkit {

// Categorical product with projections. Non-degenerate m-simplices are pairs
// of m-simplices with no common degeneracy.
struct Product {
    SimplicialSet set;
    SimplicialMap pr1, pr2;
    // Normal form of the pair (x, y) of equal dimension.
    SimplexRef pair(const SimplicialSet& x_set, const SimplicialSet& y_set, const SimplexRef& x,
                    const SimplexRef& y) const;

    std::map<std::tuple<int, std::vector<int>, int, std::vector<int>>, int> index;
};
Product product(const SimplicialSet& x, const SimplicialSet& y);

// Colimit of a finite diagram of simplicial sets.
struct ColimitArrow {
    int from = 0, to = 0;
    SimplicialMap map;
};
struct Colimit {
    SimplicialSet set;
    std::vector<SimplicialMap> legs;          // one per object
    std::vector<std::pair<int, int>> origin;  // nd simplex -> (object, nd) it was created from
};
Colimit colimit(const std::vector<const SimplicialSet*>& objects, const std::vector<ColimitArrow>& arrows);

// Map out of a colimit determined by a cocone; `leg_image(object, nd)` gives
// the image of a non-degenerate simplex of an object. Only origins are queried.
SimplicialMap map_from_colimit(const Colimit& c,
                               const std::function<SimplexRef(int object, int nd)>& leg_image);

// Colimit of one piece per non-degenerate simplex of X glued along faces:
// for every nd simplex y and face index i there is a glue object with one
// arrow into the piece of y (along the i-th coface) and one into the piece of
// the non-degenerate simplex underlying d_i y (along its degeneracy). Pieces
// come first, so every colimit simplex originates in a piece.
struct PieceFunctions {
    std::function<const SimplicialSet&(int nd)> piece;
    std::function<const SimplicialSet&(int nd, int i)> glue;
    std::function<SimplicialMap(int nd, int i)> glue_into_self;
    std::function<SimplicialMap(int nd, int i)> glue_into_face;
};
Colimit colimit_over_simplices(const SimplicialSet& x, const PieceFunctions& fns);

// Barycentric subdivision of a general simplicial set, computed as the
// colimit of sd(Delta^n) over the simplex presentation.
struct Subdivision {
    SimplicialSet set;
    Colimit colim;
    // Vertex of sd(X) -> non-degenerate simplex of X whose barycentre it is.
    std::vector<int> barycentre_of;
    // For each nd simplex of sd(X): the nd simplex of X whose copy created it
    // and the chain of subsets (bitmasks) in that copy.
    std::vector<int> carrier;
    std::vector<std::vector<unsigned>> chain;
};
Subdivision sd(const SimplicialSet& x);
// sd on maps.
SimplicialMap sd_map(const SimplicialSet& x, const Subdivision& sdx, const SimplicialSet& y,
                     const Subdivision& sdy, const SimplicialMap& f);
// Last vertex map sd(X) -> X.
SimplicialMap last_vertex(const SimplicialSet& x, const Subdivision& sdx);

// The map Delta^m -> Delta^n of a monotone operator, as an ordered-complex map.
SimplicialMap op_map(const Op& alpha);

}  // namespace stratkit
