#include <gtest/gtest.h>

#include "abc/closed_form.hpp"

using abc::CutCase;
using abc::Rational;

TEST(ClosedForm, Kappa) {
    EXPECT_EQ(abc::kappa(Rational(6), Rational(3), Rational(1), 1), 3u);
    EXPECT_EQ(abc::kappa(Rational(6), Rational(3), Rational(1), 2), 0u);
    EXPECT_EQ(abc::kappa(Rational(5), Rational(3), Rational(1), 0), 5u);
    EXPECT_THROW(abc::kappa(Rational(5), Rational(3), Rational(0), 0), abc::ParameterError);
}

TEST(ClosedForm, DeltaStar) {
    EXPECT_EQ(abc::delta_star(Rational(3), Rational(1)), 1);
    EXPECT_EQ(abc::delta_star(Rational(1), Rational(1)), 0);
    EXPECT_EQ(abc::delta_star(Rational(4), Rational(1)), 2);
    EXPECT_EQ(abc::delta_star(Rational(5), Rational(2)), 1);
    EXPECT_THROW(abc::delta_star(Rational(1), Rational(0)), abc::ParameterError);
}

TEST(ClosedForm, OptimalCuts) {
    auto a = abc::optimal_cuts_equal_lr(Rational(6), Rational(3), Rational(1));
    EXPECT_EQ(a.k_star, 3u);
    EXPECT_EQ(a.case_taken, CutCase::DeltaStar);
    EXPECT_EQ(a.min_size_lower_bound, 6u);

    a = abc::optimal_cuts_equal_lr(Rational(4), Rational(4), Rational(1));
    EXPECT_EQ(a.k_star, 0u);
    EXPECT_EQ(a.case_taken, CutCase::Zero);
    EXPECT_EQ(a.min_size_lower_bound, 3u);

    a = abc::optimal_cuts_equal_lr(Rational(0), Rational(3), Rational(1));
    EXPECT_EQ(a.k_star, 0u);
    EXPECT_EQ(a.min_size_lower_bound, 1u);

    EXPECT_THROW(abc::optimal_cuts_equal_lr(Rational(1), Rational(1), Rational(2)), abc::ParameterError);
    EXPECT_THROW(abc::optimal_cuts_equal_lr(abc::SvbcParams(1, 2, 1), Rational(1)), abc::ParameterError);
    EXPECT_THROW(abc::optimal_cuts_equal_lr(abc::SvbcParams(1, 1, 1, abc::Decay::Harmonic), Rational(1)),
                 abc::ParameterError);
}

TEST(ClosedForm, ThresholdAndLowerCount) {
    EXPECT_EQ(abc::cut_benefit_threshold(Rational(3), Rational(1)), Rational(3));
    EXPECT_EQ(abc::cut_benefit_threshold(Rational(1), Rational(1)), Rational(0));
    EXPECT_EQ(abc::cut_benefit_threshold(Rational(4), Rational(1)), Rational(8));
    EXPECT_EQ(abc::min_cut_count_lower(Rational(10), Rational(3), Rational(1)), 7u);
    EXPECT_EQ(abc::min_cut_count_lower(Rational(3), Rational(3), Rational(1)), 0u);
    EXPECT_EQ(abc::min_cut_count_lower(Rational(10), Rational(3), Rational(2)), 4u);
}

TEST(ClosedForm, SizeByCutCountIsNotMonotone) {
    EXPECT_EQ(abc::size_by_cut_count(Rational(5), Rational(3), Rational(1), 0), 7u);
    EXPECT_EQ(abc::size_by_cut_count(Rational(5), Rational(3), Rational(1), 1), 8u);
    EXPECT_EQ(abc::size_by_cut_count(Rational(5), Rational(3), Rational(1), 2), 5u);
}

TEST(ClosedForm, MatchesScanOverCutCounts) {
    for (long twice_z = 0; twice_z <= 30; ++twice_z) {
        for (long r = 1; r <= 5; ++r) {
            for (const Rational& c : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)}) {
                if (c > Rational(r)) {
                    continue;
                }
                const Rational z(twice_z, 2);
                const auto ans = abc::optimal_cuts_equal_lr(z, Rational(r), c);
                std::uint64_t best = UINT64_MAX;
                for (std::uint64_t k = 0; k <= abc::kappa(z, Rational(r), c, 0); ++k) {
                    best = std::min(best, abc::size_by_cut_count(z, Rational(r), c, k));
                }
                EXPECT_EQ(ans.min_size_lower_bound, best) << "Z=" << z << " r=" << r << " c=" << c;
            }
        }
    }
}
