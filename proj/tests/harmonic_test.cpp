#include <cmath>

#include <gtest/gtest.h>

#include "abc/harmonic.hpp"

using abc::Rational;

TEST(Harmonic, ExactValues) {
    EXPECT_EQ(abc::harmonic(0), Rational(0));
    EXPECT_EQ(abc::harmonic(1), Rational(1));
    EXPECT_EQ(abc::harmonic(2), Rational(3, 2));
    EXPECT_EQ(abc::harmonic(4), Rational(25, 12));
}

TEST(Harmonic, InverseSmallArguments) {
    EXPECT_EQ(abc::harmonic_inverse(Rational(0)), 0u);
    EXPECT_EQ(abc::harmonic_inverse(Rational(-2)), 0u);
    EXPECT_EQ(abc::harmonic_inverse(Rational(1, 7)), 1u);
    EXPECT_EQ(abc::harmonic_inverse(Rational(1)), 1u);
    EXPECT_EQ(abc::harmonic_inverse(Rational(2)), 4u);
    EXPECT_EQ(abc::harmonic_inverse(Rational(3)), 11u);
    EXPECT_EQ(abc::harmonic_inverse(Rational(25, 12)), 4u);
    EXPECT_EQ(abc::harmonic_inverse(Rational(25, 12) + Rational(1, 1000000)), 5u);
}

TEST(Harmonic, InverseMatchesLinearScan) {
    // H^-1(x) is the least k with H(k) >= x
    for (long num = 1; num <= 60; ++num) {
        const Rational x(num, 7);
        std::uint64_t k = 0;
        mpq_class h(0);
        while (h < x.mpq()) {
            ++k;
            h += mpq_class(1, k);
        }
        EXPECT_EQ(abc::harmonic_inverse(x), k) << x;
    }
}

TEST(Harmonic, InverseLargeArguments) {
    // Known thresholds: H(12366) < 10 <= H(12367), H(272400599) < 20 <= H(272400600).
    EXPECT_EQ(abc::harmonic_inverse(Rational(10)), 12367u);
    EXPECT_EQ(abc::harmonic_inverse(Rational(20)), 272400600u);
}

TEST(Harmonic, EnclosureContainsExactValue) {
    for (std::uint64_t k : {1u, 10u, 64u, 65u, 100u, 1000u}) {
        const auto enc = abc::harmonic_enclosure(k);
        const double h = abc::harmonic(k).to_double();
        EXPECT_LE(enc.lower(), h);
        EXPECT_GE(enc.upper(), h);
        EXPECT_LT(enc.upper() - enc.lower(), 1e-30 + 1e-15);
    }
}

TEST(Harmonic, CertifiedComparison) {
    EXPECT_TRUE(abc::harmonic_geq(4, Rational(25, 12)));
    EXPECT_FALSE(abc::harmonic_geq(3, Rational(2)));
    EXPECT_TRUE(abc::harmonic_geq(1000, abc::harmonic(1000)));
    EXPECT_FALSE(abc::harmonic_geq(999, abc::harmonic(1000)));
}

TEST(Harmonic, InverseOutOfRangeThrows) {
    EXPECT_THROW(abc::harmonic_inverse(Rational(43)), abc::DomainError);
}

TEST(Interval, ExpAndLogEnclose) {
    const auto e = abc::Interval::exp(Rational(1));
    EXPECT_LE(e.lower(), std::exp(1.0));
    EXPECT_GE(e.upper(), std::exp(1.0));
    const auto l2 = abc::Interval::ln2();
    EXPECT_NEAR(l2.mid(), std::log(2.0), 1e-15);
    EXPECT_TRUE(e.certainly_gt(Rational(271, 100)));
    EXPECT_TRUE(e.certainly_lt(Rational(272, 100)));
    EXPECT_THROW(abc::Interval::log(Rational(0)), abc::DomainError);
}

TEST(Harmonic, StrictUpperBoundFailsJustAboveOne) {
    // H^-1(x) = 2 on (1, 3/2] while e^x - 1 < 2 for x < ln 3
    const Rational x(211, 200);
    EXPECT_EQ(abc::harmonic_inverse(x), 2u);
    EXPECT_TRUE((abc::Interval::exp(x) - abc::Interval(1L)).certainly_lt(Rational(2)));
    EXPECT_TRUE(abc::Interval::exp(x).certainly_gt(Rational(2)));
    // just past ln 3 the bound holds again
    const Rational y(11, 10);
    EXPECT_EQ(abc::harmonic_inverse(y), 2u);
    EXPECT_TRUE((abc::Interval::exp(y) - abc::Interval(1L)).certainly_gt(Rational(2)));
}
