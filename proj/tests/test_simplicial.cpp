#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stratkit/constructions.hpp"
#include "stratkit/homology.hpp"
#include "stratkit/ordered_complex.hpp"

using namespace stratkit;

namespace {

// Apply a monotone operator to the top simplex of Delta^n by hand: the
// result must be the tuple alpha itself.
TEST(Simplicial, OperatorsOnSimplexMatchTuples) {
    for (int n = 0; n <= 3; ++n) {
        OrderedComplex s = standard_simplex_complex(n);
        const int top = s.set().size() - 1;
        for (int m = 0; m <= 4; ++m)
            for (const auto& alpha : oracle::monotone_maps(m, n)) {
                SimplexRef r = s.set().apply(s.set().nd_ref(top), alpha);
                EXPECT_EQ(r, s.ref(alpha));
            }
    }
}

TEST(Simplicial, NormalFormWordsRoundTrip) {
    for (int m = 0; m <= 4; ++m)
        for (int k = 0; k <= m; ++k)
            for (const auto& theta : oracle::monotone_maps(m, k)) {
                if (!oracle::surjective(theta, k)) continue;
                EXPECT_EQ(surjection_from_word(k, word_from_surjection(theta)), theta);
            }
}

TEST(Simplicial, ProductCountsMatchLatticePaths) {
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q) {
            Product x = product(standard_simplex_complex(p).set(), standard_simplex_complex(q).set());
            auto counts = x.set.counts();
            for (int m = 0; m <= p + q; ++m) EXPECT_EQ(counts.at(m), oracle::product_nd_count(p, q, m)) << p << q << m;
        }
    Product sq = product(standard_simplex_complex(1).set(), standard_simplex_complex(1).set());
    EXPECT_EQ(sq.set.counts(), (std::vector<int>{4, 5, 2}));
}

TEST(Simplicial, ValidateRejectsBrokenFaces) {
    SimplicialSet x;
    int a = x.add(0, {});
    int b = x.add(0, {});
    x.add(1, {x.nd_ref(a), x.nd_ref(b)});
    EXPECT_NO_THROW(x.validate());
    EXPECT_THROW(x.add(2, {x.nd_ref(a)}), Error);
}

TEST(Simplicial, CompositionIsAssociative) {
    OrderedComplex s2 = standard_simplex_complex(2);
    OrderedComplex s1 = standard_simplex_complex(1);
    SimplicialMap f = s2.vertex_map(s1, [](int v) { return v == 0 ? 0 : 1; });
    SimplicialMap g = s1.vertex_map(s2, [](int v) { return v == 0 ? 1 : 2; });
    SimplicialMap h = s2.vertex_map(s2, [](int v) { return v == 2 ? 2 : 0; });
    SimplicialMap left = compose(s2.set(), compose(s2.set(), h, g), f);
    SimplicialMap right = compose(s2.set(), h, compose(s2.set(), g, f));
    EXPECT_EQ(left, right);
    EXPECT_TRUE(is_valid_map(s2.set(), s2.set(), left));
}

TEST(Simplicial, Pi0OfDisjointUnion) {
    Coproduct c = coproduct(standard_simplex_complex(2).set(), standard_simplex_complex(0).set());
    EXPECT_EQ(pi0_count(c.set), 2);
}

TEST(Homology, SimplicesAndBoundariesMatchRationalOracle) {
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::vector<int>> facets;
        for (int i = 0; i <= n; ++i) {
            std::vector<int> f;
            for (int v = 0; v <= n; ++v)
                if (v != i) f.push_back(v);
            facets.push_back(f);
        }
        OrderedComplex bd(n + 1, facets);
        HomologyReport h = homology(bd.set(), n);
        std::vector<int> expect = oracle::betti_q(oracle::closure(facets), n);
        for (int d = 0; d <= n; ++d) EXPECT_EQ(h.betti[d], expect[d]) << "n=" << n << " d=" << d;
        EXPECT_TRUE(homology(standard_simplex_complex(n).set(), n).is_point());
    }
}

TEST(Homology, ProjectivePlaneHasTwoTorsion) {
    // Six-vertex triangulation.
    std::vector<std::vector<int>> facets{{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                                         {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}};
    OrderedComplex rp2(6, facets);
    HomologyReport h = homology(rp2.set(), 2);
    EXPECT_EQ(h.betti, (std::vector<std::int64_t>{1, 0, 0}));
    EXPECT_EQ(h.torsion[1], (std::vector<std::int64_t>{2}));
    EXPECT_TRUE(h.torsion[2].empty());
}

TEST(Homology, TorusFromProductOfCircles) {
    OrderedComplex circle(3, {{0, 1}, {0, 2}, {1, 2}});
    Product t = product(circle.set(), circle.set());
    HomologyReport h = homology(t.set, 2);
    EXPECT_EQ(h.betti, (std::vector<std::int64_t>{1, 2, 1}));
    EXPECT_EQ(t.set.euler_characteristic(), 0);
}

TEST(Homology, SubdivisionInvariance) {
    OrderedComplex circle(3, {{0, 1}, {0, 2}, {1, 2}});
    Product t = product(circle.set(), standard_simplex_complex(1).set());
    EXPECT_EQ(homology(sd(t.set).set, 2), homology(t.set, 2));
    EXPECT_EQ(homology(sd(sd(circle.set()).set).set, 1), homology(circle.set(), 1));
}

TEST(Homology, InducedIsomorphismDetection) {
    OrderedComplex circle(3, {{0, 1}, {0, 2}, {1, 2}});
    OrderedComplex pt = standard_simplex_complex(0);
    SimplicialMap collapse = circle.vertex_map(pt, [](int) { return 0; });
    EXPECT_FALSE(induces_homology_iso(circle.set(), pt.set(), collapse, 1));
    EXPECT_TRUE(induces_homology_iso(circle.set(), pt.set(), collapse, 0));
    const Subdivision s = sd(circle.set());
    EXPECT_TRUE(induces_homology_iso(s.set, circle.set(), last_vertex(circle.set(), s), 1));
}

TEST(Homology, SmithFormOfKnownMatrix) {
    // diag-equivalent to (2, 6).
    SparseMatrix m{2, 2, {{{0, 2}, {1, 4}}, {{0, 4}, {1, 2}}}};
    SmithForm f = smith_normal_form(m);
    EXPECT_EQ(f.rank, 2);
    EXPECT_EQ(f.invariant_factors, (std::vector<std::int64_t>{2, 6}));
}

}  // namespace
