#include <gtest/gtest.h>

#include "abc/instances.hpp"
#include "abc/optimizer.hpp"

using abc::Rational;

TEST(Triangles, DerivedModel) {
    const auto [p, z] = abc::derive_model(1);
    EXPECT_EQ(p.ell, Rational(1, 2));
    EXPECT_EQ(p.r, Rational(1, 2));
    EXPECT_EQ(p.c, Rational(1, 2));
    EXPECT_EQ(p.decay, abc::Decay::Constant);
    EXPECT_EQ(z, Rational(1, 2));
    EXPECT_EQ(abc::derive_model(4).second, Rational(2));
    EXPECT_THROW(abc::derive_model(0), abc::ParameterError);
}

TEST(Triangles, Relaxation) {
    const abc::TriangleInstance inst(3);
    EXPECT_EQ(inst.lp_value, Rational(9, 2));
    EXPECT_EQ(inst.ip_value, Rational(3));
    EXPECT_EQ(inst.gap, Rational(3, 2));
}

TEST(Triangles, OptimalPlan) {
    const auto plan = abc::optimal_plan(3);
    EXPECT_EQ(plan.k_star, 3u);
    EXPECT_EQ(plan.delta_star, 0);
    EXPECT_EQ(plan.min_size_lower_bound, 4u);
    EXPECT_EQ(abc::triangle_pure_branch_size(3), 15u);
    EXPECT_EQ(abc::optimal_plan(1).k_star, 1u);
}

TEST(Triangles, OptimizerAgrees) {
    for (std::uint64_t m = 1; m <= 8; ++m) {
        const auto [p, z] = abc::derive_model(m);
        const auto res = abc::min_tree_time(p, abc::TimeFn::one(), z);
        EXPECT_EQ(res.size, m + 1);
        EXPECT_EQ(res.num_cuts, m);
        EXPECT_EQ(res.branch_depth, 0u);
    }
}
