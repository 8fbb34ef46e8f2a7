#pragma once

#include <string>

#include "stratkit/diagrams.hpp"
#include "stratkit/poset.hpp"
#include "stratkit/stratified.hpp"
#include "stratkit/vertical.hpp"

namespace stratkit {

// Text in, text out; parse errors surface as ErrorKind::Malformed.
//
// Poset:      {"elements": [...], "leq": [[a, b], ...]}
// Simplicial: {"simplices": [{"id", "dim", "faces": [[nd_id, word], ...]}]}
// Stratified: simplicial plus "flag" per simplex and an optional "poset"
// Labelled:   simplicial plus "label" per simplex and an optional "poset"
// Diagram:    {"values": {"[0,1]": sset}, "restrictions": {"[0]<=[0,1]": map}}
// Map:        {"images": {src_id: [nd_id, word]}} with optional "source" and
//             "target" objects (stratified) and an optional "poset"
//
// Emitted documents are self-contained: stratified, labelled and diagram
// output embeds the poset. Element labels are used everywhere flags appear.

std::string read_text_file(const std::string& path);

PosetPtr poset_from_json(const std::string& text);
std::string poset_to_json(const Poset& p);

SimplicialSet sset_from_json(const std::string& text);
std::string sset_to_json(const SimplicialSet& s);

// `p` may be null when the document embeds its poset.
StratifiedSet stratified_from_json(const std::string& text, PosetPtr p = nullptr);
std::string stratified_to_json(const StratifiedSet& k, int truncation = -1);

LabelledSet labelled_from_json(const std::string& text, PosetPtr p = nullptr);
std::string labelled_to_json(const LabelledSet& s);

Diagram diagram_from_json(const std::string& text, PosetPtr p = nullptr);
std::string diagram_to_json(const Diagram& d);

struct MapDocument {
    StratifiedSet source, target;
    SimplicialMap map;
};
// Reads source, target and images from one document.
MapDocument map_document_from_json(const std::string& text, PosetPtr p = nullptr);
std::string map_document_to_json(const StratifiedSet& source, const StratifiedSet& target,
                                 const SimplicialMap& f);
// Images only, against known source and target.
SimplicialMap map_from_json(const std::string& text, const SimplicialSet& source, const SimplicialSet& target);
std::string map_to_json(const SimplicialSet& source, const SimplicialSet& target, const SimplicialMap& f);

}  // namespace stratkit
