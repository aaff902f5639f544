#include <gtest/gtest.h>

#include <cmath>

#include "sumfree/error.hpp"
#include "sumfree/hpreal.hpp"

using namespace sumfree;

TEST(HPReal, ExactConstructionsArePoints) {
    EXPECT_TRUE(HPReal::from_long(7).is_point());
    EXPECT_TRUE(HPReal::from_double(0.1).is_point());
    EXPECT_TRUE(HPReal::from_integer(BigCount("123456789012345678901234567890")).is_point());
    const auto third = HPReal::from_rational(Rational(1, 3));
    EXPECT_FALSE(third.is_point());
    EXPECT_TRUE(third.contains(Rational(1, 3)));
    EXPECT_LT(third.width(), 1e-37);
}

TEST(HPReal, ArithmeticEnclosesExactValue) {
    const auto third = HPReal::from_rational(Rational(1, 3));
    const auto sum = third + third + third;
    EXPECT_TRUE(sum.contains(Rational(1)));
    EXPECT_TRUE((HPReal::from_long(1) / HPReal::from_long(7) * HPReal::from_long(7)).contains(Rational(1)));
    EXPECT_TRUE((HPReal::from_long(2) - third).contains(Rational(5, 3)));
    EXPECT_THROW(HPReal::from_long(1) / HPReal::hull(HPReal::from_long(-1), HPReal::from_long(1)), InvalidInput);
}

TEST(HPReal, Transcendentals) {
    const auto s = sqrt(HPReal::from_long(2));
    EXPECT_LE(s.lower_double(), std::sqrt(2.0));
    EXPECT_GE(s.upper_double(), std::sqrt(2.0));
    EXPECT_TRUE((s * s).contains(Rational(2)));
    const auto e = exp(HPReal::from_long(1));
    EXPECT_NEAR(e.mid_double(), std::exp(1.0), 1e-15);
    EXPECT_TRUE(log(exp(HPReal::from_long(3))).contains(Rational(3)));
}

TEST(HPReal, RationalPowers) {
    EXPECT_TRUE(pow(HPReal::from_long(15), Rational(1)).is_point());
    EXPECT_TRUE(pow(HPReal::from_long(2), Rational(10)).contains(Rational(1024)));
    const auto r = pow(HPReal::from_long(458), Rational(1, 14));
    EXPECT_TRUE(pow(r, Rational(14)).contains(Rational(458)));
    EXPECT_NEAR(r.mid_double(), std::pow(458.0, 1.0 / 14), 1e-14);
    const auto big_den = pow(HPReal::from_long(3), Rational(1, (1 << 21) + 1));
    EXPECT_NEAR(big_den.mid_double(), std::pow(3.0, 1.0 / ((1 << 21) + 1)), 1e-14);
}

TEST(HPReal, PrecisionNarrowsIntervals) {
    const auto lo = pow(HPReal::from_long(31, 128), Rational(1, 4));
    const auto hi = pow(HPReal::from_long(31, 512), Rational(1, 4));
    EXPECT_EQ(hi.precision(), 512);
    EXPECT_LT(hi.width(), lo.width());
    EXPECT_LT(lo.relative_width(), 1e-36);
}

TEST(HPReal, DecimalStringsBracketValue) {
    const auto third = HPReal::from_rational(Rational(1, 3));
    EXPECT_EQ(third.lower_string(6), "3.33333e-01");
    EXPECT_EQ(third.upper_string(6), "3.33334e-01");
}

TEST(Compare, DecidesDisjointIntervals) {
    EXPECT_EQ(compare(HPReal::from_long(1), HPReal::from_long(2)), Cmp::Less);
    EXPECT_EQ(compare(HPReal::from_long(3), HPReal::from_long(2)), Cmp::Greater);
    EXPECT_EQ(compare(HPReal::from_long(2), HPReal::from_long(2)), Cmp::Equal);
    EXPECT_EQ(compare(HPReal::from_long(458), BigCount(458)), Cmp::Equal);
    EXPECT_EQ(compare(BigCount(457), HPReal::from_long(458)), Cmp::Less);
    const auto third = HPReal::from_rational(Rational(1, 3));
    EXPECT_EQ(compare(third, third), Cmp::Undecided);
    EXPECT_STREQ(to_string(Cmp::Undecided), "undecided");
    EXPECT_STREQ(to_string(Cmp::Less), "less");
}

TEST(Compare, EscalatesPrecision) {
    // 2^(1/2) vs a rational agreeing to about 60 decimal digits needs more than 128 bits.
    Rational close("14142135623730950488016887242096980785696718753769480731766797/"
                         "10000000000000000000000000000000000000000000000000000000000000");
    close.canonicalize();
    const auto d = decide([&](mpfr_prec_t prec) {
        return compare(sqrt(HPReal::from_long(2, prec)), HPReal::from_rational(close, prec));
    });
    EXPECT_EQ(d.result, Cmp::Greater);
    EXPECT_GT(d.precision, 128);
    const auto never = decide([](mpfr_prec_t) { return Cmp::Undecided; });
    EXPECT_EQ(never.result, Cmp::Undecided);
    EXPECT_EQ(never.precision, kMaxPrecisionBits);
}

TEST(DecimalRational, ShortestReading) {
    EXPECT_EQ(decimal_rational(0.4), Rational(2, 5));
    EXPECT_EQ(decimal_rational(1e-4), Rational(1, 10000));
    EXPECT_EQ(decimal_rational(3.0), Rational(3));
    EXPECT_EQ(decimal_rational(1500.0), Rational(1500));
    EXPECT_EQ(decimal_rational(-0.25), Rational(-1, 4));
    EXPECT_EQ(decimal_rational(0.0), Rational(0));
    EXPECT_THROW(decimal_rational(std::nan("")), InvalidInput);
}
