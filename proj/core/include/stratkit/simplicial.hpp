#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "stratkit/common.hpp"

namespace stratkit {

// A monotone map [m] -> [n], stored as its list of values. Simplicial
// operators act on the right: x . alpha.
using Op = std::vector<int>;

// A simplex in Eilenberg-Zilber normal form: s_{j1} ... s_{jr} applied to the
// non-degenerate simplex `nd`, with j1 > ... > jr.
struct SimplexRef {
    int nd = -1;
    std::vector<int> degen;

    bool degenerate() const { return !degen.empty(); }
    auto operator<=>(const SimplexRef&) const = default;
};

struct NdSimplex {
    int dim = 0;
    std::vector<SimplexRef> faces;  // d_0 .. d_dim; empty for vertices
    std::string name;
};

// Operator helpers.
Op identity_op(int n);
Op coface_op(int n, int i);       // d^i : [n-1] -> [n]
Op codegeneracy_op(int n, int j); // s^j : [n+1] -> [n]
Op compose_ops(const Op& outer, const Op& inner);  // outer o inner
bool is_monotone(const Op& a);
// Surjection [k + word.size()] -> [k] encoded by a strictly decreasing word.
Op surjection_from_word(int k, const std::vector<int>& word);
std::vector<int> word_from_surjection(const Op& theta);
// Canonicalises an arbitrary list of degeneracy indices (applied left to
// right as s_{w0} s_{w1} ... ) into a strictly decreasing word.
std::vector<int> normalize_word(std::vector<int> word);

class SimplicialSet {
public:
    int add(int dim, std::vector<SimplexRef> faces, std::string name = {});

    int size() const { return static_cast<int>(simplices_.size()); }
    bool empty() const { return simplices_.empty(); }
    const NdSimplex& operator[](int id) const { return simplices_.at(id); }
    const std::vector<NdSimplex>& simplices() const { return simplices_; }
    void set_name(int id, std::string name) { simplices_.at(id).name = std::move(name); }

    int dim() const;  // -1 when empty
    std::vector<int> counts() const;  // nd simplices per dimension
    std::vector<int> of_dim(int n) const;

    int ref_dim(const SimplexRef& x) const;
    // x . alpha for any monotone alpha into [dim x].
    SimplexRef apply(const SimplexRef& x, const Op& alpha) const;
    SimplexRef face(const SimplexRef& x, int i) const;
    SimplexRef degeneracy(const SimplexRef& x, int j) const;
    SimplexRef nd_ref(int id) const { return SimplexRef{id, {}}; }
    int vertex(const SimplexRef& x, int v) const;
    std::vector<int> vertices(const SimplexRef& x) const;
    std::vector<int> vertices(int id) const { return vertices(nd_ref(id)); }

    // Applies a raw operator word (faces and degeneracies, rightmost first)
    // and returns the normal form.
    SimplexRef normalize(int nd, const std::vector<std::pair<char, int>>& word) const;

    // All n-simplices, degenerate ones included.
    std::vector<SimplexRef> all_simplices(int n) const;

    // Throws Malformed if face data violates dimension or simplicial identities.
    void validate() const;

    int euler_characteristic() const;

private:
    std::vector<NdSimplex> simplices_;
};

// A simplicial map, stored as the image of each non-degenerate source simplex.
struct SimplicialMap {
    std::vector<SimplexRef> image;

    SimplexRef operator()(const SimplicialSet& target, const SimplexRef& x) const;
    bool operator==(const SimplicialMap&) const = default;
    auto operator<=>(const SimplicialMap&) const = default;
};

SimplicialMap identity_map(const SimplicialSet& x);
// g o f; `target` is the codomain of g.
SimplicialMap compose(const SimplicialSet& target, const SimplicialMap& g, const SimplicialMap& f);
bool is_valid_map(const SimplicialSet& src, const SimplicialSet& tgt, const SimplicialMap& f);
bool is_injective_map(const SimplicialSet& src, const SimplicialMap& f);

// Subcomplex on the non-degenerate simplices flagged by `keep` (must be closed
// under faces), with its inclusion.
struct Subcomplex {
    SimplicialSet set;
    SimplicialMap inclusion;
    std::vector<int> new_id;  // old id -> new id or -1
};
Subcomplex subcomplex(const SimplicialSet& x, const std::vector<char>& keep);
// Smallest subcomplex containing the flagged simplices.
std::vector<char> face_closure(const SimplicialSet& x, std::vector<char> keep);

// Connected components of the 1-skeleton: component index per vertex id.
std::vector<int> vertex_components(const SimplicialSet& x, int* count = nullptr);
int pi0_count(const SimplicialSet& x);

// Coproduct with its two inclusions.
struct Coproduct {
    SimplicialSet set;
    SimplicialMap in_left, in_right;
};
Coproduct coproduct(const SimplicialSet& a, const SimplicialSet& b);

}  // namespace stratkit
