#include <gtest/gtest.h>

#include "stratkit/corpus.hpp"
#include "stratkit/diagrams.hpp"
#include "stratkit/ordered_complex.hpp"
#include "stratkit/subdivision.hpp"
#include "stratkit/vertical.hpp"

using namespace stratkit;

namespace {

PosetPtr P() { return chain3(); }

SimplicialSet point() {
    SimplicialSet s;
    s.add(0, {});
    return s;
}

TEST(Vertical, PointLabelledByFlagIsThatSimplex) {
    LabelledSet s{P(), point(), {{0, 1}}};
    Verticalization v = verticalize(s);
    EXPECT_TRUE(find_stratified_isomorphism(v.set, standard_simplex(P(), {0, 1})).has_value());
}

TEST(Vertical, EdgeWithSmallerEdgeLabel) {
    OrderedComplex edge(2, {{0, 1}});
    LabelledSet s{P(), edge.set(), {{0, 1}, {0, 1}, {1}}};
    Verticalization v = verticalize(s);
    // Two vertical columns and the edge at height 1.
    EXPECT_EQ(v.set.carrier.counts(), (std::vector<int>{4, 3}));
}

TEST(Vertical, LabelsMustShrinkAlongFaces) {
    OrderedComplex edge(2, {{0, 1}});
    LabelledSet s{P(), edge.set(), {{1}, {1}, {0, 1}}};
    EXPECT_THROW(s.validate(), Error);
}

TEST(Vertical, LabelledSubdivisionOfEdge) {
    LabelledSubdivision l = label_subdivision(standard_simplex(P(), {0, 1}));
    int with_both = 0;
    for (int v : l.labelled.carrier.of_dim(0)) with_both += l.labelled.labels[v] == Flag{0, 1};
    EXPECT_EQ(with_both, 1);
}

TEST(Vertical, MatchesStratifiedSubdivisionOnCorpus) {
    SdPCache cache(P());
    for (const auto& e : standard_corpus(P())) {
        Verticalization v = verticalize(label_subdivision(e.set).labelled);
        EXPECT_TRUE(find_stratified_isomorphism(v.set, sd_p(e.set, cache).set).has_value()) << e.name;
    }
}

TEST(Vertical, SubdivisionOfMapPreservesLabels) {
    StratifiedInclusion h = horn(P(), {0, 1, 2}, 1);
    StratifiedSet full = standard_simplex(P(), {0, 1, 2});
    LabelledSubdivision la = label_subdivision(h.sub), lb = label_subdivision(full);
    // sd(f) sends each simplex into one whose label is at least as large.
    SimplicialMap base = sd_map(h.sub.carrier, la.sd, full.carrier, lb.sd, h.inclusion);
    EXPECT_TRUE(is_label_preserving(la.labelled, lb.labelled, base));
}

TEST(Diagrams, UOfPointLabelledByEdgeFlag) {
    Diagram u = u_functor(LabelledSet{P(), point(), {{0, 1}}});
    for (size_t i = 0; i < u.flags.size(); ++i)
        EXPECT_EQ(u.values[i].size(), flag_subflag(u.flags[i], {0, 1}) ? 1 : 0);
    EXPECT_TRUE(is_cofibrant(u).cofibrant);
}

TEST(Diagrams, UOfLabelledSubdivisionAtTopFlagIsTheLink) {
    LabelledSubdivision l = label_subdivision(standard_simplex(P(), {0, 1}));
    Diagram u = u_functor(l.labelled);
    EXPECT_EQ(u.values[u.index_of({0, 1})].size(), 1);
}

// F at [0], [1], [2], [0,1], [0,2] is a point, empty elsewhere: the images
// of F[0,1] and F[0,2] in F[0] meet although F[0,1,2] is empty.
Diagram broken_intersection() {
    Diagram d = empty_diagram(P());
    for (const Flag& f : std::vector<Flag>{{0}, {1}, {2}, {0, 1}, {0, 2}}) d.values[d.index_of(f)] = point();
    for (auto& [key, m] : d.restriction)
        if (!d.values[key.second].empty()) m.image = {SimplexRef{0, {}}};
    return d;
}

TEST(Diagrams, IntersectionConditionIsChecked) {
    Diagram d = broken_intersection();
    EXPECT_NO_THROW(d.validate());
    EXPECT_FALSE(is_cofibrant(d).cofibrant);
    try {
        diagram_to_labelled(d);
        FAIL() << "expected NotCofibrant";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotCofibrant);
    }
}

TEST(Diagrams, MonomorphismConditionIsChecked) {
    Diagram d = empty_diagram(P());
    SimplicialSet two;
    two.add(0, {});
    two.add(0, {});
    d.values[d.index_of({0, 1})] = two;
    d.values[d.index_of({0})] = point();
    d.values[d.index_of({1})] = point();
    d.restriction[{d.index_of({0}), d.index_of({0, 1})}].image = {SimplexRef{0, {}}, SimplexRef{0, {}}};
    d.restriction[{d.index_of({1}), d.index_of({0, 1})}].image = {SimplexRef{0, {}}, SimplexRef{0, {}}};
    EXPECT_FALSE(is_cofibrant(d).cofibrant);
}

TEST(Diagrams, GeneratorRealisesToSimplexTimesFlag) {
    OrderedComplex edge(2, {{0, 1}});
    Diagram g = generator(P(), edge.set(), {0, 1});
    EXPECT_TRUE(is_cofibrant(g).cofibrant);
    CpResult c = c_p(g);
    StratifiedProduct expect = stratified_product(standard_simplex(P(), {0, 1}), edge.set());
    EXPECT_TRUE(find_stratified_isomorphism(c.set, expect.set).has_value());
}

TEST(Diagrams, RoundTripAndRealisationOnLabelledCorpus) {
    for (const auto& e : labelled_corpus(P())) {
        Diagram u = u_functor(e.set);
        ASSERT_TRUE(is_cofibrant(u).cofibrant) << e.name;
        EXPECT_TRUE(find_labelled_isomorphism(diagram_to_labelled(u), e.set).has_value()) << e.name;
        EXPECT_TRUE(find_stratified_isomorphism(c_p(u).set, verticalize(e.set).set).has_value()) << e.name;
    }
}

TEST(Diagrams, IdentityIsNatural) {
    Diagram u = u_functor(label_subdivision(standard_simplex(P(), {0, 1, 2})).labelled);
    EXPECT_TRUE(is_natural(u, u, identity_diagram_map(u)));
    EXPECT_TRUE(levelwise_compare(u, u, identity_diagram_map(u), 1).passes());
}

}  // namespace
