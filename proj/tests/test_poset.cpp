#include <gtest/gtest.h>

#include "stratkit/poset.hpp"

using namespace stratkit;

TEST(Poset, ClosureOfGeneratingPairs) {
    Poset p({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    EXPECT_TRUE(p.leq(p.index_of("a"), p.index_of("c")));
    EXPECT_FALSE(p.leq(p.index_of("c"), p.index_of("a")));
    EXPECT_EQ(p.height(), 3);
}

TEST(Poset, RejectsCycles) {
    EXPECT_THROW(Poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
}

TEST(Poset, FlagCountsOnChain) {
    Poset p = Poset::chain(3);
    // Weakly increasing sequences of length L over 3 elements: C(L + 2, 2).
    EXPECT_EQ(flags_up_to(p, 4).size(), 3u + 6u + 10u + 15u);
    EXPECT_EQ(regular_flags(p).size(), 7u);
}

TEST(Poset, RegularFlagsOfAntichainAreSingletons) {
    Poset p = Poset::antichain({"x", "y", "z"});
    EXPECT_EQ(regular_flags(p).size(), 3u);
    EXPECT_FALSE(p.is_flag({0, 1}));
}

TEST(Poset, FlagParsingRoundTrips) {
    Poset p = Poset::chain(3);
    Flag f = p.parse_flag("0,0,2");
    EXPECT_EQ(f, (Flag{0, 0, 2}));
    EXPECT_EQ(p.format_flag(f), "[0,0,2]");
    EXPECT_THROW(p.parse_flag("2,0"), Error);
    EXPECT_THROW(p.parse_flag("0,7"), Error);
}

TEST(Poset, FaceAndDegeneracyOfFlags) {
    EXPECT_EQ(flag_face({0, 1, 2}, 1), (Flag{0, 2}));
    EXPECT_EQ(flag_degeneracy({0, 1, 2}, 1), (Flag{0, 1, 1, 2}));
    EXPECT_EQ(underlying_regular({0, 0, 1, 1}), (Flag{0, 1}));
    EXPECT_TRUE(flag_subflag({0, 2}, {0, 1, 2}));
    EXPECT_FALSE(flag_subflag({1}, {0, 2}));
}
