#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "stratkit/constructions.hpp"
#include "stratkit/ordered_complex.hpp"
#include "stratkit/stratified.hpp"

namespace stratkit {

// A vertex of sd_P(Delta^J): a non-empty subset of [n] (bitmask) together
// with a poset element attained by J on that subset.
using SdPVertex = std::pair<unsigned, int>;

// sd_P(Delta^J) as a subcomplex of sd(Delta^n) x N(P). Simplices are chains
// (sigma_0, q_0) < ... < (sigma_k, q_k), componentwise increasing, with every
// q_j attained by J on sigma_0. The condition is pairwise but not transitive,
// so this is a subcomplex of the nerve of the product order rather than the
// nerve of a poset; maps out of it are still determined by their vertices.
struct SdPSimplex {
    Flag j;
    OrderedComplex complex;
    std::vector<SdPVertex> vertex;
    std::map<SdPVertex, int> vertex_of;
    StratifiedSet strat;

    int n() const { return static_cast<int>(j.size()) - 1; }
    int find(const SdPVertex& v) const;  // -1 if absent
};

// Builds and memoises sd_P(Delta^J) per flag for one poset. Thread-safe.
class SdPCache {
public:
    explicit SdPCache(PosetPtr p) : poset_(std::move(p)) {}
    const PosetPtr& poset() const { return poset_; }
    const SdPSimplex& simplex(const Flag& j);

private:
    PosetPtr poset_;
    std::mutex mu_;
    std::map<Flag, std::unique_ptr<SdPSimplex>> cache_;
};

// The naive subdivision of Delta^J: sd(Delta^n), vertex sigma in stratum
// p_{max sigma}.
StratifiedSet naive_simplex(PosetPtr p, const Flag& j);

// Vertex-function maps between the complexes above; nullopt if some simplex
// is not sent to a simplex.
std::optional<SimplicialMap> sdp_vertex_map(const SdPSimplex& src, const SdPSimplex& tgt,
                                            const std::function<SdPVertex(const SdPVertex&)>& f);
std::optional<SimplicialMap> naive_vertex_map(int src_n, int tgt_n, const std::function<unsigned(unsigned)>& f);

// Vertex formulas on subsets of [n].
unsigned j_tilde(int n, int k, unsigned sigma);      // sd(Delta^n) -> sd(Delta^n)
unsigned r_tilde(int n, int k, unsigned mu);         // sd(Delta^{n+1}) -> sd(Delta^n)
unsigned moss_r_tilde(int n, int k, unsigned mu);    // sd(Delta^{n+1}) -> sd(Delta^n), unconjugated
unsigned moss_j_tilde(int n, int m, unsigned sigma); // sd(Delta^n) -> sd(Delta^n), unconjugated
unsigned reverse_mask(int n, unsigned sigma);        // {i} -> {n - i}
int max_stratum(const PosetPtr& p, const Flag& j, unsigned sigma);

// Flag with entry k repeated.
Flag flag_repeat(const Flag& j, int k);

// Maps on stratified subdivisions of simplices, all as vertex functions.
// Each throws Malformed if the formula fails to give a simplicial map.
SimplicialMap sdp_op(SdPCache& c, const Flag& target, const Op& alpha);  // sd_P(alpha) : sd_P(Delta^{J alpha}) -> sd_P(Delta^J)
SimplicialMap j_map(SdPCache& c, const Flag& j, int k);                  // j^k on sd_P(Delta^J)
SimplicialMap r_map(SdPCache& c, const Flag& j, int k);                  // r^k : sd_P(Delta^{J^k}) -> sd_P(Delta^J)
SimplicialMap moss_r(const Flag& j, int k);                              // sd_P^naiv(Delta^{J^k}) -> sd_P^naiv(Delta^J)
SimplicialMap lv_p_simplex(SdPCache& c, const Flag& j);                  // sd_P(Delta^J) -> Delta^J
SimplicialMap t_simplex(SdPCache& c, const Flag& j);                     // sd_P(Delta^J) -> sd_P^naiv(Delta^J)
// f of the factorisation j^n = f o t.
SimplicialMap factor_f(SdPCache& c, const Flag& j);
// g with t_J o r^k = g o t_{J^k}.
SimplicialMap square_g(const PosetPtr& p, const Flag& j, int k);

// sd_P of a general stratified simplicial set, glued from sd_P(Delta^J).
struct StratifiedSubdivision {
    StratifiedSet set;
    Colimit colim;
    std::vector<int> carrier;                       // nd simplex of K whose piece created it
    std::vector<std::vector<SdPVertex>> chain;      // its vertices in that piece
};
StratifiedSubdivision sd_p(const StratifiedSet& k, SdPCache& cache);
StratifiedSubdivision sd_p(const StratifiedSet& k);
SimplicialMap sd_p_map(const StratifiedSet& k, const StratifiedSubdivision& sdk, const StratifiedSet& l,
                       const StratifiedSubdivision& sdl, const SimplicialMap& f, SdPCache& cache);
SimplicialMap lv_p(const StratifiedSet& k, const StratifiedSubdivision& sdk, SdPCache& cache);

// sd_P^naiv(K) = (sd K, phi_K o l.v.).
struct NaiveSubdivision {
    StratifiedSet set;
    Subdivision sd;
};
NaiveSubdivision sd_p_naiv(const StratifiedSet& k);
// t : sd_P(K) -> sd_P^naiv(K).
SimplicialMap t_map(const StratifiedSet& k, const StratifiedSubdivision& sdk, const NaiveSubdivision& nk,
                    SdPCache& cache);

// Witness preimage of a naive simplex under t_J, per the recipe that adds to
// every member the vertices first reached in their own stratum.
std::vector<SdPVertex> t_preimage_witness(const PosetPtr& p, const Flag& j, const std::vector<unsigned>& chain);

}  // namespace stratkit
