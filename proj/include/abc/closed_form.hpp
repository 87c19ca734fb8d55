// Copyright (c) abc-tree contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string_view>

#include "abc/params.hpp"
#include "abc/rational.hpp"

namespace abc {

// Which branch of the optimal cut-count formula produced k*.
enum class CutCase : std::uint8_t {
    DeltaStar,       // k* = kappa(delta*)
    DeltaStarMinus1, // k* = kappa(delta* - 1)
    DepthMaxMinus1,  // k* = kappa(depth_max - 1)
    Zero,            // pure branching
};

inline std::string_view to_string(CutCase c) {
    switch (c) {
    case CutCase::DeltaStar: return "DeltaStar";
    case CutCase::DeltaStarMinus1: return "DeltaStarMinus1";
    case CutCase::DepthMaxMinus1: return "DepthMaxMinus1";
    case CutCase::Zero: return "Zero";
    }
    return "Zero";
}

struct CutCountAnswer {
    std::uint64_t k_star = 0;
    CutCase case_taken = CutCase::Zero;
    std::uint64_t min_size_lower_bound = 0;
    std::int64_t delta_star = 0;
    std::int64_t depth_max = 0;
};

namespace detail {

inline std::uint64_t pow2(std::int64_t e) {
    if (e < 0 || e > 62) {
        throw DomainError("2^" + std::to_string(e) + " is outside the supported range");
    }
    return std::uint64_t{1} << e;
}

// Largest p with 2^p <= n, for n >= 1.
inline std::int64_t floor_log2(const mpz_class& n) {
    if (n < 1) {
        throw DomainError("floor_log2 of " + n.get_str());
    }
    return static_cast<std::int64_t>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1;
}

inline void require_positive_cut(const Rational& c) {
    if (c.sign() <= 0) {
        throw ParameterError("cut improvement must be positive (got c=" + c.str() + ")");
    }
}

inline void require_cut_le_branch(const Rational& r, const Rational& c) {
    require_positive_cut(c);
    if (c > r) {
        throw ParameterError("requires 0 < c <= r (got c=" + c.str() + ", r=" + r.str() + ")");
    }
}

// max{0, ceil((Z - delta r)/c)}, delta may be negative.
inline std::uint64_t kappa_signed(const Rational& bound, const Rational& r, const Rational& c, std::int64_t delta) {
    require_positive_cut(c);
    const Rational rest = bound - Rational(static_cast<long>(delta)) * r;
    if (rest.sign() <= 0) {
        return 0;
    }
    return to_uint64((rest / c).ceil());
}

} // namespace detail

// Fewest root cuts letting a depth-delta branching component finish proving Z.
inline std::uint64_t kappa(const Rational& bound, const Rational& r, const Rational& c, std::uint64_t delta) {
    return detail::kappa_signed(bound, r, c, static_cast<std::int64_t>(delta));
}

// floor(log2(ceil(r/c))), computed on integers.
inline std::int64_t delta_star(const Rational& r, const Rational& c) {
    detail::require_positive_cut(c);
    if (r.sign() <= 0) {
        throw ParameterError("branch improvement r must be positive");
    }
    return detail::floor_log2((r / c).ceil());
}

// ceil(Z/r): depth of the pure branching tree.
inline std::int64_t depth_max(const Rational& bound, const Rational& r) {
    if (r.sign() <= 0) {
        throw ParameterError("branch improvement r must be positive");
    }
    return std::max<std::int64_t>(0, to_int64((bound / r).ceil()));
}

// k + 2^(delta_k + 1) - 1 with delta_k = max{0, ceil((Z - ck)/r)}: size of
// the cut-and-branch tree using k root cuts when ell = r.
inline std::uint64_t size_by_cut_count(const Rational& bound, const Rational& r, const Rational& c, std::uint64_t k) {
    if (r.sign() <= 0) {
        throw ParameterError("branch improvement r must be positive");
    }
    const Rational rest = bound - c * Rational(static_cast<long>(k));
    const std::int64_t depth = rest.sign() <= 0 ? 0 : to_int64((rest / r).ceil());
    return k + 2 * detail::pow2(depth) - 1;
}

// Size-minimizing number of root cuts for constant cuts with 0 < c <= ell = r.
inline CutCountAnswer optimal_cuts_equal_lr(const Rational& bound, const Rational& r, const Rational& c) {
    detail::require_cut_le_branch(r, c);
    if (bound.sign() < 0) {
        throw ParameterError("target bound must be nonnegative");
    }
    CutCountAnswer ans;
    ans.delta_star = delta_star(r, c);
    ans.depth_max = depth_max(bound, r);
    const auto k = [&](std::int64_t d) { return detail::kappa_signed(bound, r, c, d); };
    const std::int64_t ds = ans.delta_star;
    if (bound >= r * Rational(static_cast<long>(ds))) {
        if (k(ds - 1) - k(ds) >= detail::pow2(ds)) {
            ans.k_star = k(ds);
            ans.case_taken = CutCase::DeltaStar;
        } else {
            ans.k_star = k(ds - 1);
            ans.case_taken = CutCase::DeltaStarMinus1;
        }
    } else if (k(ans.depth_max - 1) < detail::pow2(ans.depth_max)) {
        ans.k_star = k(ans.depth_max - 1);
        ans.case_taken = CutCase::DepthMaxMinus1;
    } else {
        ans.k_star = 0;
        ans.case_taken = CutCase::Zero;
    }
    ans.min_size_lower_bound = size_by_cut_count(bound, r, c, ans.k_star);
    return ans;
}

inline CutCountAnswer optimal_cuts_equal_lr(const SvbcParams& params, const Rational& bound) {
    if (!params.equal_branching()) {
        throw ParameterError("closed-form cut count requires l = r (got " + params.str() + ")");
    }
    if (params.decay != Decay::Constant) {
        throw ParameterError("closed-form cut count requires constant cut strength");
    }
    return optimal_cuts_equal_lr(bound, params.r, params.c);
}

// r * floor(log2(ceil(r/c))): above this bound minimal trees use a cut.
inline Rational cut_benefit_threshold(const Rational& r, const Rational& c) {
    detail::require_cut_le_branch(r, c);
    return r * Rational(static_cast<long>(delta_star(r, c)));
}

// max{0, ceil((Z - Zbar)/c)}: cuts forced in every minimal tree past Zbar.
inline std::uint64_t min_cut_count_lower(const Rational& bound, const Rational& threshold, const Rational& c) {
    detail::require_positive_cut(c);
    const Rational rest = bound - threshold;
    if (rest.sign() <= 0) {
        return 0;
    }
    return to_uint64((rest / c).ceil());
}

} // namespace abc
