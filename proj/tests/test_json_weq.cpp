#include <gtest/gtest.h>

#include "stratkit/corpus.hpp"
#include "stratkit/json_io.hpp"
#include "stratkit/links.hpp"
#include "stratkit/subdivision.hpp"
#include "stratkit/weq.hpp"

using namespace stratkit;

namespace {

PosetPtr P() { return chain3(); }

TEST(Json, StratifiedRoundTrip) {
    for (const auto& e : standard_corpus(P())) {
        std::string text = stratified_to_json(e.set);
        StratifiedSet back = stratified_from_json(text);
        EXPECT_TRUE(find_stratified_isomorphism(back, e.set).has_value()) << e.name;
        EXPECT_EQ(stratified_to_json(back), text) << "emission is not stable for " << e.name;
    }
}

TEST(Json, LabelledAndDiagramRoundTrip) {
    for (const auto& e : labelled_corpus(P())) {
        LabelledSet back = labelled_from_json(labelled_to_json(e.set));
        EXPECT_TRUE(find_labelled_isomorphism(back, e.set).has_value()) << e.name;
        Diagram u = u_functor(e.set);
        Diagram d = diagram_from_json(diagram_to_json(u));
        EXPECT_EQ(diagram_to_json(d), diagram_to_json(u)) << e.name;
    }
}

TEST(Json, PosetDocument) {
    PosetPtr p = poset_from_json(R"({"elements": ["a", "b", "c"], "leq": [["a", "b"], ["b", "c"]]})");
    EXPECT_TRUE(p->leq(0, 2));
    EXPECT_EQ(*poset_from_json(poset_to_json(*p)), *p);
}

TEST(Json, HandWrittenTriangle) {
    const char* text = R"({
      "poset": {"elements": ["p0", "p1"], "leq": [["p0", "p1"]]},
      "simplices": [
        {"id": "t", "dim": 2, "faces": [["e12", []], ["e02", []], ["e01", []]], "flag": ["p0", "p0", "p1"]},
        {"id": "e12", "dim": 1, "faces": [["v2", []], ["v1", []]], "flag": ["p0", "p1"]},
        {"id": "e02", "dim": 1, "faces": [["v2", []], ["v0", []]], "flag": ["p0", "p1"]},
        {"id": "e01", "dim": 1, "faces": [["v1", []], ["v0", []]], "flag": ["p0", "p0"]},
        {"id": "v0", "dim": 0, "faces": [], "flag": ["p0"]},
        {"id": "v1", "dim": 0, "faces": [], "flag": ["p0"]},
        {"id": "v2", "dim": 0, "faces": [], "flag": ["p1"]}
      ]})";
    StratifiedSet k = stratified_from_json(text);
    EXPECT_EQ(k.carrier.counts(), (std::vector<int>{3, 3, 1}));
    EXPECT_TRUE(find_stratified_isomorphism(k, standard_simplex(k.poset, {0, 0, 1})).has_value());
}

void expect_malformed(const std::string& text) {
    try {
        stratified_from_json(text, P());
        FAIL() << "accepted: " << text;
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Malformed) << e.what();
    }
}

TEST(Json, MalformedInputsAreRejected) {
    expect_malformed("{");
    expect_malformed(R"({"simplices": 3})");
    expect_malformed(R"({"simplices": [{"id": "a", "dim": 1, "faces": [["b", []], ["b", []]], "flag": ["0", "0"]}]})");
    expect_malformed(R"({"simplices": [{"id": "a", "dim": 0, "faces": [], "flag": ["7"]}]})");
    expect_malformed(R"({"simplices": [{"id": "a", "dim": 0, "faces": [], "flag": ["1"]},
                                       {"id": "b", "dim": 0, "faces": [], "flag": ["0"]},
                                       {"id": "e", "dim": 1, "faces": [["b", []], ["a", []]], "flag": ["1", "0"]}]})");
}

TEST(Json, MapDocumentRoundTrip) {
    StratifiedInclusion h = horn(P(), {0, 1, 2}, 1);
    StratifiedSet full = standard_simplex(P(), {0, 1, 2});
    MapDocument m = map_document_from_json(map_document_to_json(h.sub, full, h.inclusion));
    EXPECT_EQ(m.map, h.inclusion);
}

TEST(Probe, IdentityAndLastVertexPass) {
    SdPCache cache(P());
    for (const auto& e : standard_corpus(P())) {
        EXPECT_FALSE(probe(e.set, e.set, stratified_identity(e.set), 2).refuted()) << e.name;
        StratifiedSubdivision s = sd_p(e.set, cache);
        EXPECT_FALSE(probe(s.set, e.set, lv_p(e.set, s, cache), 2).refuted()) << e.name;
    }
}

TEST(Probe, BoundaryInclusionRefutedAtTopFlag) {
    StratifiedInclusion b = boundary(P(), {0, 1, 2});
    StratifiedSet full = standard_simplex(P(), {0, 1, 2});
    for (ProbeMode mode : {ProbeMode::Link, ProbeMode::Holink}) {
        ProbeReport r = probe(b.sub, full, b.inclusion, 1, mode, 2);
        ASSERT_TRUE(r.refuted());
        EXPECT_EQ(*r.certificate(), (Flag{0, 1, 2}));
    }
}

TEST(Probe, LinkAndHolinkModesAgree) {
    StratifiedSet full = standard_simplex(P(), {0, 0, 1});
    for (int k = 0; k < 3; ++k) {
        StratifiedInclusion h = horn(P(), {0, 0, 1}, k);
        ProbeReport a = probe(h.sub, full, h.inclusion, 1, ProbeMode::Link);
        ProbeReport b = probe(h.sub, full, h.inclusion, 1, ProbeMode::Holink, 2);
        EXPECT_EQ(a.verdict(), b.verdict()) << k;
        // Refuted maps are never homotopy equivalences.
        if (a.refuted()) EXPECT_FALSE(is_stratified_homotopy_equivalence(h.sub, full, h.inclusion));
    }
}

TEST(Probe, HolinkDiagramOfLastVertex) {
    SdPCache cache(P());
    StratifiedSet k = standard_simplex(P(), {0, 1});
    StratifiedSubdivision s = sd_p(k, cache);
    HolinkDiagram a = diagram_d(s.set, 2), b = diagram_d(k, 2);
    DiagramMap m = diagram_d_map(a, b, k, lv_p(k, s, cache));
    EXPECT_TRUE(is_natural(a.diagram, b.diagram, m));
    EXPECT_FALSE(probe_diagram(a.diagram, b.diagram, m, 1).refuted());
}

}  // namespace
