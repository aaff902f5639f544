#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "sumfree/bigcount.hpp"

using sumfree::BigCount;

TEST(BigCount, ArithmeticAndComparison) {
    BigCount a(41);
    a += BigCount(214);
    EXPECT_EQ(a, BigCount(255));
    a -= BigCount(55);
    EXPECT_EQ(a.to_u64(), 200u);
    a *= BigCount(3);
    EXPECT_EQ(a.to_string(), "600");
    EXPECT_LT(BigCount(7), BigCount(8));
    EXPECT_GT(BigCount("100000000000000000000000"), BigCount(UINT64_MAX));
}

TEST(BigCount, SubtractionBelowZeroThrows) {
    BigCount a(3);
    EXPECT_THROW(a -= BigCount(4), std::exception);
}

TEST(BigCount, ParsesDecimalAndRejectsGarbage) {
    EXPECT_EQ(BigCount("458").to_u64(), 458u);
    EXPECT_THROW(BigCount("12x"), std::exception);
    EXPECT_THROW(BigCount("-5"), std::exception);
}

TEST(BigCount, PowersAndBinomials) {
    EXPECT_EQ(BigCount::pow(BigCount(4), 3), BigCount(64));
    EXPECT_EQ(BigCount::pow2(70).to_string(), "1180591620717411303424");
    EXPECT_EQ(BigCount::binomial(7, 3), BigCount(35));
    EXPECT_EQ(BigCount::binomial(3, 5), BigCount(0));
}

TEST(BigCount, From128BitValue) {
    sumfree::UInt128 v = static_cast<sumfree::UInt128>(UINT64_MAX) * 1000 + 7;
    EXPECT_EQ(BigCount::from_u128(v).to_string(), "18446744073709551615007");
    EXPECT_FALSE(BigCount::from_u128(v).fits_u64());
}

TEST(BigCount, StreamsAsDecimal) {
    std::ostringstream s;
    s << BigCount(85666);
    EXPECT_EQ(s.str(), "85666");
}

TEST(BigCount, AdditionMatchesNativeOnRandomValues) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t x = rng() >> 2;
        const std::uint64_t y = rng() >> 2;
        EXPECT_EQ((BigCount(x) + BigCount(y)).to_u64(), x + y);
        EXPECT_EQ(BigCount(x).is_odd(), (x & 1) == 1);
    }
}
