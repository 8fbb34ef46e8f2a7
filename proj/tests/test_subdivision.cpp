#include <gtest/gtest.h>

#include <bit>
#include <functional>
#include <set>

#include "stratkit/corpus.hpp"
#include "stratkit/identities.hpp"
#include "stratkit/subdivision.hpp"
#include "stratkit/homology.hpp"

using namespace stratkit;

namespace {

PosetPtr P() { return chain3(); }

// Simplices of sd_P(Delta^J) straight from the definition: chains of pairs
// (sigma, q), increasing in both components, with every q attained by J on
// the smallest sigma. Counted per dimension.
std::vector<int> oracle_sdp_counts(const Flag& j) {
    const int n = static_cast<int>(j.size()) - 1;
    std::vector<std::pair<unsigned, int>> verts;
    for (unsigned s = 1; s < (1u << (n + 1)); ++s) {
        std::set<int> qs;
        for (int i = 0; i <= n; ++i)
            if (s & (1u << i)) qs.insert(j[i]);
        for (int q : qs) verts.push_back({s, q});
    }
    auto attained = [&](unsigned s, int q) {
        for (int i = 0; i <= n; ++i)
            if ((s & (1u << i)) && j[i] == q) return true;
        return false;
    };
    auto below = [](const std::pair<unsigned, int>& a, const std::pair<unsigned, int>& b) {
        return (a.first & ~b.first) == 0 && a.second <= b.second && a != b;
    };
    std::vector<int> counts;
    std::vector<std::pair<unsigned, int>> chain;
    std::function<void()> rec = [&] {
        const size_t d = chain.size() - 1;
        if (counts.size() <= d) counts.resize(d + 1, 0);
        ++counts[d];
        for (const auto& v : verts) {
            if (!below(chain.back(), v) || !attained(chain.front().first, v.second)) continue;
            chain.push_back(v);
            rec();
            chain.pop_back();
        }
    };
    for (const auto& v : verts) {
        chain = {v};
        rec();
    }
    return counts;
}

TEST(SdP, SimplexCountsMatchDefinition) {
    SdPCache cache(P());
    for (const Flag& j : flags_up_to(*P(), 4))
        EXPECT_EQ(cache.simplex(j).complex.set().counts(), oracle_sdp_counts(j)) << P()->format_flag(j);
}

TEST(SdP, SubdividedSimplicesAreContractible) {
    SdPCache cache(P());
    for (const Flag& j : flags_up_to(*P(), 3)) {
        const SimplicialSet& s = cache.simplex(j).complex.set();
        EXPECT_TRUE(homology(s, s.dim()).is_point()) << P()->format_flag(j);
    }
}

TEST(SdP, LastVertexMapIsStratified) {
    SdPCache cache(P());
    for (const auto& e : standard_corpus(P())) {
        StratifiedSubdivision s = sd_p(e.set, cache);
        EXPECT_NO_THROW(s.set.validate());
        EXPECT_TRUE(is_stratified_map(s.set, e.set, lv_p(e.set, s, cache))) << e.name;
    }
}

TEST(SdP, ConstantFlagGivesOrdinarySubdivision) {
    // With a single stratum every subset carries one element, so sd_P is sd.
    SdPCache cache(P());
    for (int n = 0; n <= 3; ++n)
        EXPECT_EQ(cache.simplex(Flag(n + 1, 1)).complex.set().counts(), sd_simplex(n).complex.set().counts());
    // A regular flag doubles every subset with two strata.
    EXPECT_EQ(cache.simplex({0, 1}).complex.set().counts(), (std::vector<int>{4, 3}));
}

TEST(SdP, NaturalInStratifiedMaps) {
    SdPCache cache(P());
    StratifiedInclusion h = horn(P(), {0, 1, 2}, 1);
    StratifiedSet full = standard_simplex(P(), {0, 1, 2});
    StratifiedSubdivision a = sd_p(h.sub, cache), b = sd_p(full, cache);
    SimplicialMap f = sd_p_map(h.sub, a, full, b, h.inclusion, cache);
    EXPECT_TRUE(is_stratified_map(a.set, b.set, f));
    // lv_P is natural: lv o sd_P(f) = f o lv.
    EXPECT_EQ(compose(full.carrier, lv_p(full, b, cache), f), compose(full.carrier, h.inclusion, lv_p(h.sub, a, cache)));
}

TEST(Identities, AllHoldThroughLengthFour) {
    IdentityReport r = verify_identities(P(), 4);
    EXPECT_EQ(r.failures(), 0) << r.to_tsv(*P());
    EXPECT_GT(r.instances.size(), 1000u);
}

// The relation between r^k and j^h with j^{h+1} on the left only survives
// the conjugated formulas at h = k: on the vertex {h} the two sides give
// {h, ..., n} and {h}.
TEST(Identities, ShiftedVariantOfFourFailsBelowDiagonal) {
    SdPCache cache(P());
    for (const Flag& j : flags_up_to(*P(), 3)) {
        const int n = static_cast<int>(j.size()) - 1;
        for (int k = 0; k <= n; ++k)
            for (int h = 0; h <= k; ++h) {
                const Flag src = flag_repeat(j, k);
                const SimplicialSet& tgt = cache.simplex(j).complex.set();
                SimplicialMap lhs = compose(tgt, r_map(cache, j, k), j_map(cache, src, h + 1));
                SimplicialMap rhs = compose(tgt, j_map(cache, j, h), r_map(cache, j, k));
                EXPECT_EQ(lhs == rhs, h == k) << P()->format_flag(j) << " k=" << k << " h=" << h;
            }
    }
}

TEST(Identities, FactorisationsAndSurjectivity) {
    SdPCache cache(P());
    IdentityReport f = verify_factorizations(P(), 4, cache);
    EXPECT_EQ(f.failures(), 0) << f.to_tsv(*P());
    IdentityReport t = verify_t_surjective(P(), 4, 3, cache);
    EXPECT_EQ(t.failures(), 0) << t.to_tsv(*P());
}

TEST(Identities, TMapIsSurjectiveOnComplexes) {
    SdPCache cache(P());
    for (const auto& e : standard_corpus(P())) {
        StratifiedSubdivision s = sd_p(e.set, cache);
        NaiveSubdivision nv = sd_p_naiv(e.set);
        SimplicialMap t = t_map(e.set, s, nv, cache);
        EXPECT_TRUE(is_stratified_map(s.set, nv.set, t)) << e.name;
        std::vector<char> hit(nv.set.size(), 0);
        for (const auto& r : t.image)
            if (!r.degenerate()) hit[r.nd] = 1;
        for (int y = 0; y < nv.set.size(); ++y) EXPECT_TRUE(hit[y]) << e.name << " misses " << y;
    }
}

}  // namespace
