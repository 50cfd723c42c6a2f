#include <braidchow/level_tree.hpp>
#include <braidchow/solver.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace braidchow;

TEST(LevelTrees, CountsMatchChainsInPartitionLattice) {
    const std::uint64_t expected[] = {1, 4, 32, 436, 9012, 262760};
    for (int n = 2; n <= 7; ++n) {
        const auto census = strata_census(n, false);
        EXPECT_EQ(census.total, expected[n - 2]) << n;
        EXPECT_EQ(census.total, chain_count(n)) << n;
        const auto by_len = chain_counts_by_length(n);
        for (const auto& [len, c] : census.count_by_length) EXPECT_EQ(c, by_len.at(static_cast<std::size_t>(len - 1))) << n << " length " << len;
    }
}

TEST(LevelTrees, SmallCensusByLength) {
    const auto census = strata_census(4, false);
    EXPECT_EQ(census.count_by_length, (std::map<int, std::uint64_t>{{1, 1}, {2, 13}, {3, 18}}));
}

TEST(LevelTrees, EnumeratedTreesAreValidAndDistinct) {
    for (int n = 2; n <= 6; ++n) {
        std::set<std::vector<std::pair<std::vector<int>, int>>> keys;
        for (const auto& t : enumerate_level_trees(n)) {
            EXPECT_NO_THROW(t.validate());
            std::vector<int> want(static_cast<std::size_t>(n));
            std::iota(want.begin(), want.end(), 1);
            EXPECT_EQ(t.labels(), want);
            EXPECT_TRUE(keys.insert(t.canonical_key()).second) << "duplicate tree at n=" << n;
        }
    }
}

TEST(LevelTrees, PruneRoundTrip) {
    for (int n = 2; n <= 5; ++n)
        for (const auto& t : enumerate_level_trees(n)) {
            if (t.length() == 1) {
                EXPECT_THROW(prune(t), std::invalid_argument);
                continue;
            }
            const auto p = prune(t);
            EXPECT_NO_THROW(p.tree.validate());
            EXPECT_EQ(p.tree.length(), t.length() - 1);
            EXPECT_EQ(unprune(p).canonical_key(), t.canonical_key());
        }
}

TEST(LevelTrees, ValidationRejectsUnstableVertex) {
    LevelTree t;
    t.vertices.push_back({-1, 0, {0, 1}});
    EXPECT_THROW(t.validate(), std::logic_error);
    t.vertices[0].markings.push_back(2);
    EXPECT_NO_THROW(t.validate());
    t.vertices.push_back({0, 2, {3, 4}});
    EXPECT_THROW(t.validate(), std::logic_error);  // level 1 unused
}

TEST(Strata, EPolynomials) {
    EXPECT_EQ(open_moduli_count(3), Poly(1));
    EXPECT_EQ(open_moduli_count(5), (Poly{6, -5, 1}));
    EXPECT_EQ(epoly_bn(2), Poly(1));
    EXPECT_EQ(epoly_bn(3), (Poly{1, 1}));
    EXPECT_EQ(epoly_bn(4), (Poly{1, 8, 1}));
    EXPECT_EQ(epoly_bn(5), (Poly{1, 41, 41, 1}));
}

TEST(Strata, AgreeWithNumericRecursion) {
    const auto table = hnum_stirling(7);
    for (int n = 2; n <= 7; ++n) EXPECT_EQ(epoly_bn(n), table.hnum.at(n)) << n;
}
