#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stratkit/ex.hpp"
#include "stratkit/stratified.hpp"

namespace stratkit {

// Pairing data on an inclusion A -> B: the relative non-degenerate
// simplices are split into type II (keys of t) and type I (values of t).
// `deferred` holds relative simplices at the truncation dimension whose
// partner would lie above it; `unpaired` holds simplices the construction
// rule could not place, which are defects.
struct Pairing {
    std::vector<char> in_a;  // per nd simplex of B
    std::map<int, int> t;
    std::vector<int> deferred;
    std::vector<int> unpaired;
    int truncation = -1;  // -1 when B is not truncated
};

struct PairingCheck {
    bool well_formed = false;
    bool proper = false;
    bool admissible = false;
    bool regular = false;
    std::string detail;

    bool all() const { return well_formed && proper && admissible && regular; }
};
PairingCheck check_pairing(const StratifiedSet& b, const Pairing& p);

// Pairs relative simplices by ascending dimension: a simplex already hit as
// a partner is type I, otherwise `partner` proposes its type I partner.
Pairing build_pairing(const StratifiedSet& b, std::vector<char> in_a, int truncation,
                      const std::function<std::optional<SimplexRef>(int nd)>& partner);

struct ExPairing {
    ExSet ex;
    Pairing pairing;
    PairingCheck check;
};
// K -> Ex_P^naiv(K): x paired with x o r^m for the least m with x o j^m = x
// (unconjugated maps), so that x = d_{m+1}(x o r^m).
ExPairing build_pairing_ex_naiv(const StratifiedSet& k, int truncation, std::uint64_t budget = kDefaultBudget);
// J-hat -> Ex_P(K): x paired with x o r^k for the largest k with x o j^k = x,
// so that x = d_k(x o r^k).
ExPairing build_pairing_ex(const StratifiedSet& k, int truncation, SdPCache& cache,
                           std::uint64_t budget = kDefaultBudget);

// Membership in J-hat: x o j^n = x.
std::vector<char> j_hat_membership(const StratifiedSet& k, const ExSet& ex, SdPCache& cache);

}  // namespace stratkit
