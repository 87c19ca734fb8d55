#include <gtest/gtest.h>

#include "abc/optimizer.hpp"

using abc::Rational;
using abc::SvbcParams;
using abc::TimeFn;

namespace {

const TimeFn kHalfSlope = TimeFn::affine(Rational(1, 2), Rational(1));

void expect_valid_witness(const abc::OptResult& res, const TimeFn& w, const Rational& z) {
    ASSERT_TRUE(res.witness);
    res.witness->check_invariants();
    EXPECT_TRUE(abc::proves_bound(*res.witness, z));
    EXPECT_EQ(abc::tree_time(*res.witness, w), res.tau);
    EXPECT_EQ(res.witness->size(), res.size);
}

} // namespace

TEST(MinTreeTime, ThreeCutsThenBranch) {
    const auto res = abc::min_tree_time(SvbcParams(3, 3, 1), TimeFn::one(), Rational(6));
    EXPECT_EQ(res.tau, Rational(6));
    EXPECT_EQ(res.size, 6u);
    EXPECT_EQ(res.num_cuts, 3u);
    EXPECT_EQ(res.branch_depth, 1u);
    expect_valid_witness(res, TimeFn::one(), Rational(6));
}

TEST(MinTreeTime, CutsBelowBranch) {
    const SvbcParams p(3, 7, 2);
    const auto res = abc::min_tree_time(p, kHalfSlope, Rational(7));
    EXPECT_EQ(res.tau, Rational(13, 2));
    EXPECT_EQ(res.num_cuts, 2u);
    expect_valid_witness(res, kHalfSlope, Rational(7));
    const auto& t = *res.witness;
    const auto& root = t.node(t.root());
    ASSERT_EQ(root.kind, abc::NodeKind::Branch);
    EXPECT_EQ(t.node(root.children[0]).kind, abc::NodeKind::Cut);
    EXPECT_EQ(t.node(root.children[1]).kind, abc::NodeKind::Leaf);
}

TEST(MinTreeTime, ZeroBound) {
    for (const auto& p : {SvbcParams(3, 3, 1), SvbcParams(0, 0, 0), SvbcParams(1, 2, 1, abc::Decay::Harmonic)}) {
        const auto res = abc::min_tree_time(p, kHalfSlope, Rational(0));
        EXPECT_EQ(res.tau, Rational(1));
        EXPECT_EQ(res.size, 1u);
        const auto ro = abc::min_tree_time_root_cuts_only(p, kHalfSlope, Rational(0));
        EXPECT_EQ(ro.tau, Rational(1));
    }
}

TEST(MinTreeTime, Unprovable) {
    EXPECT_THROW(abc::min_tree_time(SvbcParams(0, 0, 0), TimeFn::one(), Rational(1)), abc::InfeasibleError);
    EXPECT_THROW(abc::min_tree_time(SvbcParams(0, 3, 0), TimeFn::one(), Rational(1)), abc::InfeasibleError);
}

TEST(MinTreeTime, CutsOnlyWhenBranchingCannot) {
    // l = 0 never closes the left child, so only cuts prove the bound.
    const auto res = abc::min_tree_time(SvbcParams(0, 2, 1), TimeFn::one(), Rational(3));
    EXPECT_EQ(res.tau, Rational(4));
    EXPECT_EQ(res.num_cuts, 3u);
}

TEST(MinTreeTime, BranchingOnlyWhenCutsAbsent) {
    const auto res = abc::min_tree_time(SvbcParams(1, 1, 0), TimeFn::one(), Rational(3));
    EXPECT_EQ(res.tau, Rational(15));
    EXPECT_EQ(res.num_cuts, 0u);
}

TEST(MinTreeTime, TableDomainError) {
    const auto w = TimeFn::table({Rational(1), Rational(2)});
    // Optimum uses 3 cuts on its path, beyond the table; pure branching is still in range.
    EXPECT_NO_THROW(abc::min_tree_time(SvbcParams(3, 3, 1), w, Rational(6)));
    const auto res = abc::min_tree_time(SvbcParams(3, 3, 1), w, Rational(6));
    EXPECT_EQ(res.tau, Rational(7));
}

TEST(MinTreeTime, StateCap) {
    abc::DpOptions o;
    o.max_states = 5;
    EXPECT_THROW(abc::min_tree_time(SvbcParams(1, 1, Rational(1, 4)), TimeFn::one(), Rational(6), o),
                 abc::DomainError);
}

TEST(RootOnly, UnequalBranching) {
    const auto ro = abc::min_tree_time_root_cuts_only(SvbcParams(3, 7, 2), kHalfSlope, Rational(7));
    EXPECT_EQ(ro.tau, Rational(7));
    EXPECT_EQ(ro.num_cuts, 0u);
    const auto fig1 = abc::min_tree_time_root_cuts_only(SvbcParams(3, 3, 1), TimeFn::one(), Rational(6));
    EXPECT_EQ(fig1.tau, Rational(6));
    expect_valid_witness(fig1, TimeFn::one(), Rational(6));
}

TEST(PureTimes, Values) {
    EXPECT_EQ(abc::pure_branch_time(SvbcParams(3, 3, 1), Rational(6)), Rational(7));
    EXPECT_EQ(abc::pure_cut_time(SvbcParams(3, 3, 1), TimeFn::one(), Rational(6)), Rational(7));
    EXPECT_EQ(abc::pure_cut_time(SvbcParams(3, 7, 2), kHalfSlope, Rational(7)), Rational(10));
    EXPECT_FALSE(abc::pure_branch_time(SvbcParams(0, 1, 1), Rational(1)));
    EXPECT_FALSE(abc::pure_cut_time(SvbcParams(1, 1, 0), TimeFn::one(), Rational(1)));
}

TEST(PrefixCuts, Placement) {
    EXPECT_EQ(abc::optimal_prefix_cuts(TimeFn::one(), 3), 3u);
    EXPECT_EQ(abc::optimal_prefix_cuts(kHalfSlope, 2), 2u);
    EXPECT_EQ(abc::optimal_prefix_cuts(TimeFn::affine(Rational(4), Rational(1)), 1), 0u);
}

TEST(ThresholdSearch, Examples) {
    const auto quad = abc::cut_threshold_search(SvbcParams(1, 1, 1), TimeFn::affine(Rational(1), Rational(1)),
                                                Rational(8), Rational(1));
    ASSERT_TRUE(quad);
    EXPECT_LE(*quad, Rational(8));
    EXPECT_EQ(abc::cut_threshold_search(SvbcParams(3, 3, 1), TimeFn::one(), Rational(8), Rational(1)), Rational(4));
    // s = pure branching size at Z=4 (31); w = 31 z + 1 keeps pure branching optimal throughout.
    EXPECT_FALSE(abc::cut_threshold_search(SvbcParams(1, 1, 1), TimeFn::affine(Rational(31), Rational(1)),
                                           Rational(4), Rational(1)));
    EXPECT_THROW(abc::cut_threshold_search(SvbcParams(1, 1, 1), TimeFn::table({Rational(1)}), Rational(4),
                                           Rational(1)),
                 abc::ParameterError);
}

TEST(MinTreeTime, HarmonicLargeCutDemand) {
    // kappa_bar(0) is in the millions here; the z cap keeps the table small.
    abc::DpOptions o;
    o.build_witness = false;
    const auto res = abc::min_tree_time(SvbcParams(Rational(1, 2), Rational(1, 2), Rational(1, 2),
                                                   abc::Decay::Harmonic),
                                        TimeFn::one(), Rational(8), o);
    EXPECT_LE(res.tau, *abc::pure_branch_time(SvbcParams(Rational(1, 2), Rational(1, 2), 0), Rational(8)));
    EXPECT_EQ(res.tau, Rational(static_cast<long>(res.size)));
}
