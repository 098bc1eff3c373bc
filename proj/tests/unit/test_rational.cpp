#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "surflines/exactnum/rational.hpp"

using surflines::BigInt;
using surflines::Rational;
using surflines::RoundingMode;

TEST(Rational, StoredReducedWithPositiveDenominator) {
    const Rational r(BigInt(6), BigInt(-4));
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(r, Rational(BigInt(-3), BigInt(2)));
    EXPECT_EQ(r.str(), "-3/2");
    EXPECT_EQ(Rational(-8).str(), "-8");
}

TEST(Rational, ZeroDenominatorAndInverseOfZeroThrow) {
    EXPECT_THROW(Rational(BigInt(1), BigInt(0)), surflines::DivisionByZero);
    EXPECT_THROW(Rational(0).inverse(), surflines::DivisionByZero);
    EXPECT_THROW(Rational(3) / Rational(0), surflines::DivisionByZero);
}

TEST(Rational, ParseAcceptsIntegersAndFractions) {
    EXPECT_EQ(Rational::parse("-128/51"), Rational(BigInt(-128), BigInt(51)));
    EXPECT_EQ(Rational::parse("12/8"), Rational(BigInt(3), BigInt(2)));
    EXPECT_EQ(Rational::parse("+7"), Rational(7));
    EXPECT_THROW(Rational::parse("1/-2"), surflines::InvalidInput);
    EXPECT_THROW(Rational::parse("abc"), surflines::InvalidInput);
    EXPECT_THROW(Rational::parse("1/"), surflines::InvalidInput);
    EXPECT_THROW(Rational::parse("3/0"), surflines::DivisionByZero);
}

TEST(Rational, DecimalRenderingTruncatesByDefault) {
    EXPECT_EQ(Rational(BigInt(-128), BigInt(51)).to_decimal(3), "-2.509");
    EXPECT_EQ(Rational(BigInt(-128), BigInt(51)).to_decimal(3, RoundingMode::nearest), "-2.510");
    EXPECT_EQ(Rational(BigInt(-27), BigInt(11)).to_decimal(3), "-2.454");
    EXPECT_EQ(Rational(BigInt(-27), BigInt(11)).to_decimal(3, RoundingMode::nearest), "-2.455");
    EXPECT_EQ(Rational(-8).to_decimal(3), "-8.000");
    EXPECT_EQ(Rational(BigInt(1), BigInt(20)).to_decimal(1), "0.0");
    EXPECT_EQ(Rational(BigInt(-1), BigInt(20)).to_decimal(1, RoundingMode::nearest), "-0.1");
    EXPECT_EQ(Rational(BigInt(7), BigInt(2)).to_decimal(0), "3");
}

TEST(Rational, TextRoundTripProperty) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const Rational r = surflines::gen::random_rational(rng, 1000);
        EXPECT_EQ(Rational::parse(r.str()), r);
    }
}

TEST(Rational, OrderingMatchesCrossMultiplication) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 500; ++i) {
        const Rational a = surflines::gen::random_rational(rng, 50);
        const Rational b = surflines::gen::random_rational(rng, 50);
        const BigInt lhs = a.numerator() * b.denominator();
        const BigInt rhs = b.numerator() * a.denominator();
        EXPECT_EQ(a < b, lhs < rhs);
        EXPECT_EQ(a == b, lhs == rhs);
    }
}
