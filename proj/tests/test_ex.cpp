#include <gtest/gtest.h>

#include "stratkit/corpus.hpp"
#include "stratkit/ex.hpp"
#include "stratkit/pairing.hpp"

using namespace stratkit;

namespace {

PosetPtr P() { return chain3(); }

TEST(Ex, OfPointIsPoint) {
    SdPCache cache(P());
    StratifiedSet pt = standard_simplex(P(), {0});
    EXPECT_EQ(ex_p(pt, 2, cache).set.size(), 1);
    EXPECT_EQ(ex_p_naiv(pt, 2).set.size(), 1);
    EXPECT_EQ(ex_p_iterated(pt, 2, 2).size(), 1);
}

TEST(Ex, LevelZeroIsTheVertices) {
    SdPCache cache(P());
    for (const auto& e : standard_corpus(P())) {
        if (e.set.carrier.dim() > 1) continue;
        ExSet x = ex_p(e.set, 0, cache);
        EXPECT_EQ(x.set.size(), static_cast<int>(e.set.carrier.of_dim(0).size())) << e.name;
    }
}

TEST(Ex, UnitMapsAreInjectiveAndCompatible) {
    SdPCache cache(P());
    for (const Flag& j : std::vector<Flag>{{0}, {0, 1}, {0, 0, 1}}) {
        StratifiedSet k = standard_simplex(P(), j);
        ExSet ex = ex_p(k, 2, cache), naive = ex_p_naiv(k, 2);
        SimplicialMap i = iota(k, ex, cache), in = iota_naiv(k, naive);
        EXPECT_TRUE(is_injective_map(k.carrier, i));
        EXPECT_TRUE(is_injective_map(k.carrier, in));
        EXPECT_TRUE(is_stratified_map(k, ex.set, i));
        // t_J o l.v. = lv_P, so iota factors through the naive unit.
        SimplicialMap via = compose(ex.set.carrier, naive_to_ex(k, naive, ex, cache), in);
        EXPECT_EQ(via, i);
    }
}

// Elements of J-hat factor through the naive subdivision: x = x o f o t.
TEST(Ex, JHatLiesInNaiveEx) {
    SdPCache cache(P());
    for (const Flag& j : std::vector<Flag>{{0, 1}, {0, 0, 1}, {0, 1, 1}}) {
        StratifiedSet k = standard_simplex(P(), j);
        ExSet ex = ex_p(k, 2, cache);
        std::vector<char> hat = j_hat_membership(k, ex, cache);
        int members = 0;
        for (int nd = 0; nd < ex.set.size(); ++nd) {
            if (!hat[nd]) continue;
            ++members;
            const auto& [flag, x] = ex.element(nd);
            const SimplicialSet& sdp = cache.simplex(flag).complex.set();
            SimplicialMap ft = compose(sdp, factor_f(cache, flag), t_simplex(cache, flag));
            EXPECT_EQ(compose(k.carrier, x, ft), x);
        }
        EXPECT_GT(members, 0);
    }
}

TEST(Ex, JHatIsASubcomplex) {
    SdPCache cache(P());
    StratifiedSet k = standard_simplex(P(), {0, 0, 1});
    ExSet ex = ex_p(k, 2, cache);
    std::vector<char> hat = j_hat_membership(k, ex, cache);
    EXPECT_EQ(face_closure(ex.set.carrier, hat), hat);
}

TEST(Pairing, ExPairingsAreProperAdmissibleRegular) {
    SdPCache cache(P());
    for (const Flag& j : std::vector<Flag>{{0}, {0, 1}, {0, 0, 1}}) {
        StratifiedSet k = standard_simplex(P(), j);
        ExPairing a = build_pairing_ex_naiv(k, 2);
        ExPairing b = build_pairing_ex(k, 2, cache);
        EXPECT_TRUE(a.check.all()) << a.check.detail;
        EXPECT_TRUE(b.check.all()) << b.check.detail;
        EXPECT_TRUE(a.pairing.unpaired.empty());
        EXPECT_TRUE(b.pairing.unpaired.empty());
    }
}

// A hand-made pairing on the horn inclusion into Delta^[0<=0<=1]: the
// missing face d_1 is paired with the top simplex.
TEST(Pairing, CheckerAcceptsHornFillerAndRejectsBadOnes) {
    StratifiedSet full = standard_simplex(P(), {0, 0, 1});
    const int top = full.carrier.size() - 1;
    int missing = full.carrier[top].faces[1].nd;
    Pairing good;
    good.in_a.assign(full.size(), 1);
    good.in_a[top] = good.in_a[missing] = 0;
    good.t[missing] = top;
    PairingCheck c = check_pairing(full, good);
    EXPECT_TRUE(c.all()) << c.detail;

    // Pairing with an inadmissible horn: missing face d_2 of [0,0,1].
    Pairing bad = good;
    int other = full.carrier[top].faces[2].nd;
    bad.in_a[missing] = 1;
    bad.in_a[other] = 0;
    bad.t = {{other, top}};
    EXPECT_FALSE(check_pairing(full, bad).admissible);

    // A relative simplex left out is not well formed.
    Pairing partial = good;
    partial.t.clear();
    EXPECT_FALSE(check_pairing(full, partial).well_formed);
}

}  // namespace
