#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stratkit/diagrams.hpp"
#include "stratkit/stratified.hpp"

namespace stratkit {

enum class ProbeMode { Link, Holink };

// Outcome of testing a stratified map flag by flag. "refuted" carries the
// first regular flag whose link (or homotopy link) map fails to be a pi_0
// bijection or a homology isomorphism through max_deg. Passing every probe
// is a necessary condition for a weak equivalence, never a proof of one.
struct ProbeReport {
    ProbeMode mode = ProbeMode::Link;
    int max_deg = 1;
    std::vector<LevelVerdict> levels;
    bool refuted() const;
    std::optional<Flag> certificate() const;
    std::string verdict() const;  // "refuted" or "passes-all-probes"
    std::string to_text(const Poset& p) const;
};

ProbeReport probe(const StratifiedSet& k, const StratifiedSet& l, const SimplicialMap& f, int max_deg,
                  ProbeMode mode = ProbeMode::Link, int truncation = 2, std::uint64_t budget = kDefaultBudget);

// Probes on diagrams compare the values flag by flag.
ProbeReport probe_diagram(const Diagram& f, const Diagram& g, const DiagramMap& m, int max_deg);

}  // namespace stratkit
