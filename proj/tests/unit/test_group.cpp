#include <gtest/gtest.h>

#include <numeric>

#include "sumfree/error.hpp"
#include "sumfree/group.hpp"

using namespace sumfree;

TEST(Group, MakeComputesOrder) {
    EXPECT_EQ(AbelianGroup::make({7}).order(), 7u);
    EXPECT_EQ(AbelianGroup::make({2, 2}).order(), 4u);
    EXPECT_EQ(AbelianGroup::make({2, 3}).name(), "Z/2xZ/3");
}

TEST(Group, MakeRejectsBadFactorLists) {
    EXPECT_THROW(AbelianGroup::make({}), InvalidInput);
    EXPECT_THROW(AbelianGroup::make({1}), InvalidInput);
    EXPECT_THROW(AbelianGroup::make({2, 0}), InvalidInput);
    EXPECT_THROW(AbelianGroup::make({1u << 13, 1u << 12}), CapExceeded);
    EXPECT_THROW(AbelianGroup::make({64}, 32), CapExceeded);
}

TEST(Group, ParsesSpecs) {
    EXPECT_EQ(parse_group_spec("Z/7"), AbelianGroup::make({7}));
    EXPECT_EQ(parse_group_spec("Z/2xZ/2"), AbelianGroup::make({2, 2}));
    EXPECT_EQ(parse_group_spec(" Z/2 x Z/3 "), AbelianGroup::make({2, 3}));
    EXPECT_EQ(parse_group_spec("Z/1").order(), 1u);
    EXPECT_EQ(parse_group_spec("Z/1").name(), "Z/1");
    for (const char* bad : {"", "Z7", "Z/", "Z/2x", "Z/2yZ/3", "Z/0", "Z/-3", "Q/5"}) {
        EXPECT_THROW(parse_group_spec(bad), InvalidInput) << bad;
    }
}

TEST(Group, Arithmetic) {
    const auto z5 = AbelianGroup::make({5});
    EXPECT_EQ(z5.add(3, 4), 2u);
    EXPECT_EQ(z5.neg(0), 0u);
    const auto g = AbelianGroup::make({2, 3});
    const GroupElement x{{1, 2}};
    EXPECT_EQ(g.add(x, x), (GroupElement{{0, 1}}));
    EXPECT_THROW((void)g.add(GroupElement{{1}}, x), InvalidInput);
}

TEST(Group, IndexingIsMixedRadixMostSignificantFirst) {
    const auto g = AbelianGroup::make({2, 3});
    EXPECT_EQ(g.index_of(GroupElement{{1, 0}}), 3u);
    EXPECT_EQ(g.element_at(5), (GroupElement{{1, 2}}));
    for (const auto& h : enumerate_factor_shapes(64)) {
        for (std::size_t i = 0; i < h.order(); ++i) ASSERT_EQ(h.index_of(h.element_at(i)), i);
    }
}

TEST(Group, ElementOrders) {
    EXPECT_EQ(AbelianGroup::make({6}).element_order(0), 1u);
    EXPECT_EQ(AbelianGroup::make({6}).element_order(4), 3u);
    const auto k = AbelianGroup::make({2, 2});
    EXPECT_EQ(k.element_order(k.index_of(GroupElement{{1, 1}})), 2u);
}

TEST(Group, OrderHistograms) {
    EXPECT_EQ(order_histogram(AbelianGroup::make({7})).counts, (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {7, 6}}));
    EXPECT_EQ(order_histogram(AbelianGroup::make({2, 2})).counts, (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 3}}));
    EXPECT_EQ(order_histogram(AbelianGroup::make({6})).counts,
              (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 1}, {3, 2}, {6, 2}}));
    EXPECT_EQ(order_histogram(AbelianGroup::make({2, 3})), order_histogram(AbelianGroup::make({6})));
}

TEST(Group, OrderDividesGroupOrderAndHistogramSums) {
    for (const auto& g : enumerate_factor_shapes(200)) {
        const auto hist = order_histogram(g);
        std::uint64_t sum = 0;
        for (const auto& [t, a] : hist.counts) {
            ASSERT_EQ(g.order() % t, 0u) << g.name();
            sum += a;
        }
        ASSERT_EQ(sum, g.order());
        ASSERT_EQ(hist.at(1), 1u);
    }
}

TEST(Group, CoprimeProductsShareHistograms) {
    for (std::uint64_t m = 2; m <= 12; ++m) {
        for (std::uint64_t n = 2; n <= 12; ++n) {
            if (std::gcd(m, n) != 1) continue;
            EXPECT_EQ(order_histogram(AbelianGroup::make({m, n})), order_histogram(AbelianGroup::make({m * n})));
        }
    }
}

TEST(Group, SmallestPrimeFactor) {
    EXPECT_EQ(smallest_prime_factor(12), 2u);
    EXPECT_EQ(smallest_prime_factor(35), 5u);
    EXPECT_EQ(smallest_prime_factor(AbelianGroup::make({7})), 7u);
    EXPECT_TRUE(is_prime(101));
    EXPECT_FALSE(is_prime(91));
}

TEST(Group, IndexP1SubgroupExamples) {
    const auto k = AbelianGroup::make({2, 2});
    const auto h = index_p1_subgroup(k);
    EXPECT_EQ(h.size(), 2u);
    EXPECT_TRUE(is_subgroup(k, h));
    EXPECT_EQ(index_p1_subgroup(AbelianGroup::make({4})), ElementSet(4, {0, 2}));
    EXPECT_EQ(index_p1_subgroup(AbelianGroup::make({6})), ElementSet(6, {0, 2, 4}));
    EXPECT_EQ(index_p1_subgroup(AbelianGroup::make({9})), ElementSet(9, {0, 3, 6}));
}

TEST(Group, IndexP1SubgroupHasIndexP1Everywhere) {
    for (const auto& g : enumerate_factor_shapes(64)) {
        const auto h = index_p1_subgroup(g);
        ASSERT_EQ(h.size() * smallest_prime_factor(g), g.order()) << g.name();
        ASSERT_TRUE(is_subgroup(g, h)) << g.name();
    }
}

TEST(Group, TranslateShiftsEveryMember) {
    const auto g = AbelianGroup::make({7});
    EXPECT_EQ(translate(g, ElementSet(7, {0, 1, 3}), 5), ElementSet(7, {5, 6, 1}));
}

TEST(Group, FactorShapesCoverEveryOrder) {
    const auto shapes = enumerate_factor_shapes(8);
    std::vector<std::string> names;
    for (const auto& g : shapes) names.push_back(g.name());
    for (const char* expected : {"Z/2", "Z/4", "Z/2xZ/2", "Z/8", "Z/2xZ/4", "Z/2xZ/2xZ/2", "Z/2xZ/3"}) {
        EXPECT_NE(std::find(names.begin(), names.end(), expected), names.end()) << expected;
    }
}
