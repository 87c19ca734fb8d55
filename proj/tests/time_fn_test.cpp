#include <gtest/gtest.h>

#include "abc/params.hpp"
#include "abc/time_fn.hpp"

using abc::Rational;
using abc::TimeFn;

TEST(TimeFn, Evaluation) {
    EXPECT_EQ(TimeFn::one()(5), Rational(1));
    EXPECT_EQ(TimeFn::affine(Rational(1, 2), Rational(1))(3), Rational(5, 2));
    EXPECT_EQ(TimeFn::polynomial({Rational(1), Rational(0), Rational(1)})(3), Rational(10));
    EXPECT_EQ(TimeFn::table({Rational(1), Rational(2), Rational(7, 2)})(2), Rational(7, 2));
}

TEST(TimeFn, TableHasNoExtrapolation) {
    const auto w = TimeFn::table({Rational(1), Rational(2)});
    EXPECT_EQ(w.max_z(), 1u);
    EXPECT_THROW(w(2), abc::DomainError);
}

TEST(TimeFn, RequiresUnitTimeAtZero) {
    EXPECT_THROW(TimeFn::affine(Rational(1), Rational(2)), abc::ParameterError);
    EXPECT_THROW(TimeFn::table({Rational(2)}), abc::ParameterError);
    EXPECT_THROW(TimeFn::parse("poly:0,1"), abc::ParameterError);
}

TEST(TimeFn, ParseGrammar) {
    EXPECT_EQ(TimeFn::parse("one")(9), Rational(1));
    EXPECT_EQ(TimeFn::parse("affine:1/2,1")(4), Rational(3));
    EXPECT_EQ(TimeFn::parse("poly:1,0,1")(2), Rational(5));
    EXPECT_EQ(TimeFn::parse("table:1,3/2,2")(1), Rational(3, 2));
    EXPECT_EQ(TimeFn::parse("affine:1/2,1").str(), "affine:1/2,1");
    EXPECT_THROW(TimeFn::parse("cubic:1"), abc::ParseError);
    EXPECT_THROW(TimeFn::parse("affine:1"), abc::ParseError);
}

TEST(TimeFn, MonotonicityChecked) {
    EXPECT_THROW(TimeFn::table({Rational(1), Rational(1, 2)}), abc::DomainError);
    EXPECT_THROW(TimeFn::affine(Rational(-1), Rational(1)).values(3), abc::DomainError);
    EXPECT_EQ(TimeFn::affine(Rational(1), Rational(1)).values(3).size(), 4u);
}

TEST(Params, Validation) {
    EXPECT_THROW(abc::SvbcParams(3, 2, 1), abc::ParameterError);
    EXPECT_THROW(abc::SvbcParams(-1, 2, 1), abc::ParameterError);
    EXPECT_THROW(abc::SvbcParams(1, 2, -1), abc::ParameterError);
    EXPECT_NO_THROW(abc::SvbcParams(0, 0, 0));
}

TEST(Params, CutsNeeded) {
    const abc::SvbcParams constant(1, 1, 1);
    EXPECT_EQ(constant.cuts_needed(Rational(5, 2)), 3u);
    EXPECT_EQ(constant.cuts_needed(Rational(0)), 0u);
    const abc::SvbcParams harmonic(1, 1, 1, abc::Decay::Harmonic);
    EXPECT_EQ(harmonic.cuts_needed(Rational(2)), 4u);
    EXPECT_EQ(harmonic.cut_bound(2), Rational(3, 2));
    EXPECT_EQ(harmonic.cut_strength(3), Rational(1, 3));
    const abc::SvbcParams no_cuts(1, 1, 0);
    EXPECT_FALSE(no_cuts.cuts_needed(Rational(1)).has_value());
}

TEST(Params, DecayParsing) {
    EXPECT_EQ(abc::parse_decay("harmonic"), abc::Decay::Harmonic);
    EXPECT_EQ(abc::parse_decay("constant"), abc::Decay::Constant);
    EXPECT_THROW(abc::parse_decay("linear"), abc::ParseError);
}
