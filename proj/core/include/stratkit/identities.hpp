#pragma once

#include <string>
#include <vector>

#include "stratkit/poset.hpp"
#include "stratkit/subdivision.hpp"

namespace stratkit {

struct IdentityInstance {
    std::string equation;
    Flag flag;                 // target flag of all composites
    std::vector<int> indices;  // k, h, i as they appear in the equation
    bool pass = false;
    std::string detail;
};

struct IdentityReport {
    std::vector<IdentityInstance> instances;

    int failures() const;
    // One line per instance: equation, flag, indices, PASS/FAIL, detail.
    std::string to_tsv(const Poset& p) const;
};

// The relations between j^k, r^k and sd_P of cofaces and codegeneracies,
// checked as exact equalities of maps for every flag of length <= max_len.
IdentityReport verify_identities(const PosetPtr& p, int max_len, SdPCache& cache);
IdentityReport verify_identities(const PosetPtr& p, int max_len);

// The auxiliary squares and triangles: l.v o t = lv_P, j^n = f o t,
// t_J o r^k = g o t_{J^k}, and that the unconjugated r^k is stratum
// preserving on naive subdivisions.
IdentityReport verify_factorizations(const PosetPtr& p, int max_len, SdPCache& cache);

// Degreewise surjectivity of t_J up to dimension max_dim, each naive simplex
// checked both by search and against the explicit witness preimage.
IdentityReport verify_t_surjective(const PosetPtr& p, int max_len, int max_dim, SdPCache& cache);

}  // namespace stratkit
