#include <gtest/gtest.h>

#include "abc/optimizer.hpp"
#include "abc/oracle.hpp"

using abc::Rational;
using abc::SvbcParams;
using abc::TimeFn;

TEST(Oracle, EqualBranching) {
    abc::EnumLimits lim;
    lim.max_depth = 4;
    const auto res = abc::enumerate_min(SvbcParams(3, 3, 1), TimeFn::one(), Rational(6), lim);
    EXPECT_EQ(res.tau, Rational(6));
    EXPECT_EQ(res.size, 6u);
}

TEST(Oracle, CutsBelowBranch) {
    abc::EnumLimits lim;
    lim.max_depth = 5;
    const auto w = TimeFn::affine(Rational(1, 2), Rational(1));
    const auto res = abc::enumerate_min(SvbcParams(3, 7, 2), w, Rational(7), lim);
    EXPECT_EQ(res.tau, Rational(13, 2));
    ASSERT_TRUE(res.witness);
    EXPECT_TRUE(abc::proves_bound(*res.witness, Rational(7)));
    EXPECT_EQ(abc::tree_time(*res.witness, w), Rational(13, 2));
}

TEST(Oracle, ZeroBound) {
    const auto res = abc::enumerate_min(SvbcParams(1, 1, 1), TimeFn::one(), Rational(0));
    EXPECT_EQ(res.tau, Rational(1));
}

TEST(Oracle, LimitsReported) {
    abc::EnumLimits lim;
    lim.max_depth = 2;
    EXPECT_THROW(abc::enumerate_min(SvbcParams(1, 1, 1), TimeFn::one(), Rational(3), lim), abc::ParameterError);
    lim.max_depth = 3;
    lim.max_nodes = 2;
    EXPECT_THROW(abc::enumerate_min(SvbcParams(1, 1, 1), TimeFn::one(), Rational(3), lim), abc::InfeasibleError);
}

// Values frozen from exhaustive enumeration.
TEST(Oracle, FrozenValues) {
    struct Case {
        SvbcParams p;
        TimeFn w;
        Rational z;
        Rational tau;
    };
    const Case cases[] = {
        {SvbcParams(1, 2, 1), TimeFn::one(), Rational(3), Rational(4)},
        {SvbcParams(1, 1, 1, abc::Decay::Harmonic), TimeFn::one(), Rational(3), Rational(7)},
        {SvbcParams(1, 1, 1), TimeFn::affine(Rational(1), Rational(1)), Rational(3), Rational(10)},
        {SvbcParams(Rational(1, 2), 2, 1), TimeFn::polynomial({Rational(1), Rational(0), Rational(1)}), Rational(2),
         Rational(7)},
    };
    for (const auto& c : cases) {
        abc::EnumLimits lim;
        lim.max_depth = 10;
        const auto res = abc::enumerate_min(c.p, c.w, c.z, lim);
        EXPECT_EQ(res.tau, c.tau) << c.p.str() << " w=" << c.w.str() << " Z=" << c.z;
        EXPECT_EQ(abc::min_tree_time(c.p, c.w, c.z).tau, res.tau) << c.p.str();
    }
}
