#pragma once

#include <string>
#include <vector>

#include "stratkit/stratified.hpp"
#include "stratkit/vertical.hpp"

namespace stratkit {

struct CorpusEntry {
    std::string name;
    StratifiedSet set;
};

// The chain 0 < 1 < 2.
PosetPtr chain3();

// Small stratified complexes over 0 < 1 < 2: simplices, boundaries, horns,
// two hollow triangles sharing a bottom-stratum vertex, and a cylinder.
std::vector<CorpusEntry> standard_corpus(const PosetPtr& p);

struct LabelledEntry {
    std::string name;
    LabelledSet set;
};
// Labelled subdivisions of the corpus plus a few hand-labelled objects.
std::vector<LabelledEntry> labelled_corpus(const PosetPtr& p);

}  // namespace stratkit
