#include <gtest/gtest.h>

#include "bch/rational.hpp"

using bch::Rational;

TEST(Rational, NormalizesOnConstruction)
{
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
    EXPECT_EQ(Rational(3, -6).fraction_string(), "-1/2");
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ParseAndPrint)
{
    EXPECT_EQ(Rational::parse("-1/24"), Rational(-1, 24));
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_EQ(Rational(5).fraction_string(), "5/1");
    EXPECT_EQ(Rational(5).to_string(), "5");
    EXPECT_EQ(Rational(-1, 24).to_string(), "-1/24");
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, Arithmetic)
{
    Rational a(1, 6), b(1, 3);
    EXPECT_EQ(a + b, Rational(1, 2));
    EXPECT_EQ(a - b, Rational(-1, 6));
    EXPECT_EQ(a * b, Rational(1, 18));
    EXPECT_EQ(a / b, Rational(1, 2));
    EXPECT_EQ(-a, Rational(-1, 6));
    EXPECT_EQ(Rational(-3, 4).abs(), Rational(3, 4));
    EXPECT_EQ(Rational(-3, 4).reciprocal(), Rational(-4, 3));
    EXPECT_THROW(Rational(0).reciprocal(), std::domain_error);
    EXPECT_THROW(a / Rational(0), std::domain_error);
    EXPECT_LT(Rational(-1, 2), Rational(1, 3));
}

TEST(Rational, ExactBeyondMachineWords)
{
    Rational f = bch::factorial(30);
    EXPECT_EQ(f.fraction_string(), "265252859812191058636308480000000/1");
    EXPECT_EQ(f / bch::factorial(29), Rational(30));
    EXPECT_EQ(bch::binomial(10, 3), Rational(120));
    EXPECT_EQ(bch::binomial(3, 5), Rational(0));
}
