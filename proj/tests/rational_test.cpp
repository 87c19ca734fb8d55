#include <gtest/gtest.h>

#include "abc/rational.hpp"

using abc::Rational;

TEST(Rational, ParsesIntegersAndFractions) {
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_EQ(Rational::parse("13/2"), Rational(13, 2));
    EXPECT_EQ(Rational::parse("-3/6"), Rational(-1, 2));
    EXPECT_EQ(Rational::parse("4/2").str(), "2");
}

TEST(Rational, RejectsMalformedText) {
    for (const char* bad : {"", "1/0", "a", "1/", "/2", "1/-2", "1.5", "1//2"}) {
        EXPECT_THROW(Rational::parse(bad), abc::ParseError) << bad;
    }
}

TEST(Rational, ArithmeticIsExact) {
    const Rational a(1, 3);
    const Rational b(1, 6);
    EXPECT_EQ(a + b, Rational(1, 2));
    EXPECT_EQ(a - b, Rational(1, 6));
    EXPECT_EQ(a * b, Rational(1, 18));
    EXPECT_EQ(a / b, Rational(2));
    EXPECT_THROW(a / Rational(0), abc::ParameterError);
}

TEST(Rational, FloorCeilAndPrinting) {
    EXPECT_EQ(Rational(7, 2).floor(), 3);
    EXPECT_EQ(Rational(7, 2).ceil(), 4);
    EXPECT_EQ(Rational(-7, 2).floor(), -4);
    EXPECT_EQ(Rational(-7, 2).ceil(), -3);
    EXPECT_EQ(Rational(6).ceil(), 6);
    EXPECT_EQ(Rational(13, 2).str(), "13/2");
    EXPECT_EQ(Rational(-1, 2).str(), "-1/2");
}

TEST(Rational, Ordering) {
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_EQ(abc::max(Rational(1, 3), Rational(1, 2)), Rational(1, 2));
    EXPECT_EQ(abc::min(Rational(1, 3), Rational(1, 2)), Rational(1, 3));
}

TEST(Rational, IntegerConversionChecksRange) {
    EXPECT_EQ(abc::to_uint64(mpz_class(5)), 5u);
    EXPECT_THROW(abc::to_uint64(mpz_class(-1)), abc::DomainError);
    mpz_class huge;
    mpz_ui_pow_ui(huge.get_mpz_t(), 2, 80);
    EXPECT_THROW(abc::to_int64(huge), abc::DomainError);
}
