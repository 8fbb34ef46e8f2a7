#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stratkit/corpus.hpp"
#include "stratkit/iso.hpp"
#include "stratkit/ordered_complex.hpp"
#include "stratkit/stratified.hpp"

using namespace stratkit;

namespace {

PosetPtr P() { return chain3(); }

// Stratified maps Delta^J -> Delta^K are monotone alpha with K o alpha = J.
int oracle_simplex_maps(const Flag& j, const Flag& k) {
    int count = 0;
    for (const auto& a : oracle::monotone_maps(static_cast<int>(j.size()) - 1, static_cast<int>(k.size()) - 1)) {
        bool ok = true;
        for (size_t i = 0; i < a.size(); ++i) ok = ok && k[a[i]] == j[i];
        count += ok;
    }
    return count;
}

TEST(Stratified, SimplexToSimplexMapCounts) {
    auto flags = flags_up_to(*P(), 3);
    for (const Flag& j : flags)
        for (const Flag& k : flags) {
            auto maps = enumerate_stratified_maps(standard_simplex(P(), j), standard_simplex(P(), k));
            EXPECT_EQ(static_cast<int>(maps.size()), oracle_simplex_maps(j, k));
        }
}

TEST(Stratified, AdmissibilityDefinitionsAgree) {
    for (const Flag& j : flags_up_to(*P(), 5))
        for (int k = 0; k < static_cast<int>(j.size()); ++k)
            EXPECT_EQ(is_admissible(j, k), is_admissible_by_degeneracy(j, k));
    EXPECT_TRUE(is_admissible({0, 0, 1}, 0));
    EXPECT_TRUE(is_admissible({0, 0, 1}, 1));
    EXPECT_FALSE(is_admissible({0, 0, 1}, 2));
    EXPECT_FALSE(is_admissible({0, 1, 2}, 1));
}

TEST(Stratified, HornsAndBoundariesHaveExpectedCounts) {
    StratifiedInclusion h = horn(P(), {0, 1, 2}, 1);
    EXPECT_EQ(h.sub.carrier.counts(), (std::vector<int>{3, 2}));
    StratifiedInclusion b = boundary(P(), {0, 1, 2});
    EXPECT_EQ(b.sub.carrier.counts(), (std::vector<int>{3, 3}));
    EXPECT_TRUE(is_stratified_map(h.sub, standard_simplex(P(), {0, 1, 2}), h.inclusion));
}

TEST(Stratified, ValidateRejectsDecreasingFlag) {
    StratifiedSet k = standard_simplex(P(), {0, 1});
    k.flags.back() = {1, 0};
    EXPECT_THROW(k.validate(), Error);
}

TEST(Stratified, StrataOfFigureEight) {
    auto corpus = standard_corpus(P());
    const StratifiedSet& eight = corpus[8].set;
    ASSERT_EQ(corpus[8].name, "figure-eight");
    EXPECT_EQ(stratum(eight, 0).sub.carrier.counts(), (std::vector<int>{1}));
    EXPECT_EQ(stratum(eight, 1).sub.carrier.counts(), (std::vector<int>{4, 2}));
    EXPECT_TRUE(stratum(eight, 2).sub.carrier.empty());
}

TEST(Stratified, HomotopyClassesOfSmallTargets) {
    // Three maps [0,0] -> [0,0]; all homotopic to the identity.
    HomotopyClasses a = homotopy_classes(standard_simplex(P(), {0, 0}), standard_simplex(P(), {0, 0}));
    EXPECT_EQ(a.maps.size(), 3u);
    EXPECT_EQ(a.num_classes, 1);
    // Two points into two points: no homotopies between distinct maps.
    StratifiedSet two = boundary(P(), {0, 0}).sub;
    HomotopyClasses b = homotopy_classes(two, two);
    EXPECT_EQ(b.maps.size(), 4u);
    EXPECT_EQ(b.num_classes, 4);
}

TEST(Stratified, AdmissibleHornsAreHomotopyEquivalences) {
    for (const Flag& j : flags_up_to(*P(), 3))
        for (int k = 0; k < static_cast<int>(j.size()) && j.size() > 1; ++k) {
            if (!is_admissible(j, k)) continue;
            StratifiedInclusion h = horn(P(), j, k);
            EXPECT_TRUE(is_stratified_homotopy_equivalence(h.sub, standard_simplex(P(), j), h.inclusion))
                << P()->format_flag(j) << " k=" << k;
        }
}

TEST(Stratified, BoundaryInclusionIsNotAnEquivalence) {
    StratifiedInclusion b = boundary(P(), {0, 1, 2});
    EXPECT_FALSE(is_stratified_homotopy_equivalence(b.sub, standard_simplex(P(), {0, 1, 2}), b.inclusion));
}

TEST(Stratified, NerveHasRegularFlagsAsSimplices) {
    StratifiedSet n = nerve(P(), 2);
    EXPECT_EQ(n.carrier.counts(), (std::vector<int>{3, 3, 1}));
}

TEST(Stratified, ProductWithIntervalIsStratifiedThroughFirstFactor) {
    StratifiedProduct c = stratified_product(standard_simplex(P(), {0, 1}), standard_simplex_complex(1).set());
    EXPECT_EQ(c.set.carrier.counts(), (std::vector<int>{4, 5, 2}));
    for (int v : c.set.carrier.of_dim(0))
        EXPECT_EQ(c.set.stratum_of_vertex(v), c.set.carrier.vertex(c.pr1.image[v], 0));
}

TEST(Iso, RelabelledComplexesAreIsomorphic) {
    // 0 -> 0, 1 -> 2, 2 -> 3, 3 -> 1 is order preserving on every simplex.
    OrderedComplex a(4, {{0, 1, 2}, {0, 3}});
    OrderedComplex b(4, {{0, 2, 3}, {0, 1}});
    auto iso = find_isomorphism(a.set(), b.set());
    ASSERT_TRUE(iso.has_value());
    EXPECT_TRUE(is_valid_map(a.set(), b.set(), *iso));
    EXPECT_EQ(canonical_hash(a.set()), canonical_hash(b.set()));
    OrderedComplex c(4, {{0, 1, 2}, {1, 3}});  // edge leaves the middle vertex
    EXPECT_FALSE(find_isomorphism(a.set(), c.set()).has_value());
}

TEST(Iso, StratifiedIsomorphismRespectsFlags) {
    StratifiedSet a = standard_simplex(P(), {0, 1});
    StratifiedSet b = standard_simplex(P(), {1, 2});
    EXPECT_FALSE(find_stratified_isomorphism(a, b).has_value());
    EXPECT_TRUE(find_stratified_isomorphism(a, a).has_value());
}

}  // namespace
