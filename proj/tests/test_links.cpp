#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stratkit/corpus.hpp"
#include "stratkit/homology.hpp"
#include "stratkit/links.hpp"

using namespace stratkit;

namespace {

PosetPtr P() { return chain3(); }

// Vertices of HoLink_I(Delta^J): stratified maps Delta^I -> Delta^J, i.e.
// monotone alpha with J o alpha = I.
int oracle_holink_vertices(const Flag& i, const Flag& j) {
    int count = 0;
    for (const auto& a : oracle::monotone_maps(static_cast<int>(i.size()) - 1, static_cast<int>(j.size()) - 1)) {
        bool ok = true;
        for (size_t x = 0; x < a.size(); ++x) ok = ok && j[a[x]] == i[x];
        count += ok;
    }
    return count;
}

TEST(Link, OfSimplexIsContractibleOrEmpty) {
    for (const Flag& j : flags_up_to(*P(), 3)) {
        StratifiedSet k = standard_simplex(P(), j);
        for (const Flag& i : regular_flags(*P())) {
            Link l = link(k, i);
            if (flag_subflag(i, j)) {
                EXPECT_TRUE(homology(l.set(), 2).is_point()) << P()->format_flag(j) << P()->format_flag(i);
            } else {
                EXPECT_TRUE(l.set().empty());
            }
        }
    }
}

TEST(Link, BoundaryLosesTheTopFlag) {
    StratifiedSet bd = boundary(P(), {0, 1, 2}).sub;
    EXPECT_TRUE(link(bd, {0, 1, 2}).set().empty());
    EXPECT_EQ(pi0_count(link(bd, {0, 2}).set()), 1);
}

TEST(Link, CylinderLinksAreCircles) {
    auto corpus = standard_corpus(P());
    const StratifiedSet& cyl = corpus.back().set;
    for (const Flag& i : std::vector<Flag>{{0}, {1}, {0, 1}}) {
        HomologyReport h = homology(link(cyl, i).set(), 1);
        EXPECT_EQ(h.betti, (std::vector<std::int64_t>{1, 1}));
    }
}

TEST(Holink, VertexCountsMatchOracle) {
    for (const Flag& j : flags_up_to(*P(), 3))
        for (const Flag& i : regular_flags(*P())) {
            Holink h = holink(standard_simplex(P(), j), i, 0);
            EXPECT_EQ(h.set().size(), oracle_holink_vertices(i, j));
        }
}

TEST(Holink, BudgetIsEnforced) {
    auto corpus = standard_corpus(P());
    try {
        holink(corpus.back().set, {0, 1}, 3, 10);
        FAIL() << "expected the budget to trip";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
    }
}

TEST(Holink, RestrictionsFormADiagram) {
    auto corpus = standard_corpus(P());
    for (const auto& e : corpus) {
        HolinkDiagram d = diagram_d(e.set, 1);
        EXPECT_NO_THROW(d.diagram.validate()) << e.name;
    }
}

TEST(Holink, AgreesWithLinkOnCorpus) {
    for (const auto& e : standard_corpus(P()))
        for (const Flag& i : regular_flags(*P())) {
            Link l = link(e.set, i);
            Holink h = holink(e.set, i, 2);
            EXPECT_EQ(homology(l.set(), 1), homology(h.set(), 1)) << e.name << " " << P()->format_flag(i);
        }
}

TEST(Holink, MapsComposeFunctorially) {
    StratifiedInclusion h = horn(P(), {0, 0, 1}, 1);
    StratifiedSet full = standard_simplex(P(), {0, 0, 1});
    for (const Flag& i : regular_flags(*P())) {
        Holink a = holink(h.sub, i, 1), b = holink(full, i, 1);
        SimplicialMap m = holink_map(a, b, full, h.inclusion);
        EXPECT_TRUE(is_valid_map(a.set(), b.set(), m));
        EXPECT_TRUE(is_injective_map(a.set(), m));
    }
}

}  // namespace
