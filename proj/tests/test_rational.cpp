#include "twodist/rational.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <sstream>
#include <stdexcept>

using twodist::Rational;

TEST(Rational, NormalisesSignAndTerms)
{
    Rational r(6, -8);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 4);
    EXPECT_EQ(Rational(0, 5), Rational());
    EXPECT_EQ(Rational(0, -5).den(), 1);
}

TEST(Rational, ZeroDenominatorThrows)
{
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, Arithmetic)
{
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(Rational(1, 5) - Rational(1, 3), Rational(-2, 15));
    EXPECT_EQ(Rational(7, 60) * Rational(60), Rational(7));
    EXPECT_EQ(Rational(2, 45) / Rational(2, 9), Rational(1, 5));
    EXPECT_EQ(-Rational(1, 12), Rational(-1, 12));
}

TEST(Rational, RuleAmountsSumExactly)
{
    // thirty 1/30 pieces and nine 1/9 pieces are exactly 1 each
    Rational a, b;
    for (int i = 0; i < 30; ++i)
        a += Rational(1, 30);
    for (int i = 0; i < 9; ++i)
        b += Rational(1, 9);
    EXPECT_EQ(a, Rational(1));
    EXPECT_EQ(b, Rational(1));
}

TEST(Rational, Ordering)
{
    EXPECT_LT(Rational(1, 15), Rational(1, 12));
    EXPECT_LT(Rational(-4, 3), Rational(-1));
    EXPECT_GT(Rational(7, 60), Rational(1, 9));
    EXPECT_TRUE(Rational(-1, 30).is_negative());
    EXPECT_FALSE(Rational(0).is_negative());
}

TEST(Rational, StringRoundTrip)
{
    EXPECT_EQ(Rational(-8).str(), "-8/1");
    EXPECT_EQ(Rational(2, 45).str(), "2/45");
    EXPECT_EQ(Rational::parse("-4/3"), Rational(-4, 3));
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_EQ(Rational::parse("3/-6"), Rational(-1, 2));
    std::ostringstream os;
    os << Rational(1, 3);
    EXPECT_EQ(os.str(), "1/3");
}

TEST(Rational, ParseRejectsGarbage)
{
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("x/2"), std::invalid_argument);
}

TEST(Rational, OverflowIsDetected)
{
    const auto big = std::numeric_limits<std::int64_t>::max();
    EXPECT_THROW(Rational(big) + Rational(1), std::overflow_error);
    EXPECT_THROW(Rational(big) * Rational(2), std::overflow_error);
    EXPECT_NO_THROW(Rational(big, 3) * Rational(3, big));
}
