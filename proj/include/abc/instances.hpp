// Copyright (c) abc-tree contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>

#include "abc/closed_form.hpp"
#include "abc/params.hpp"

namespace abc {

// Maximum independent set on m disjoint triangles.
//
// The LP relaxation sets every x_v = 1/2 (value 3m/2); the integer optimum
// picks one vertex per triangle (value m). Fixing any variable of a triangle,
// either way, caps that triangle's contribution at 1 instead of 3/2, and so
// does the clique cut x_u + x_v + x_w <= 1. Every branch and every cut
// therefore closes exactly 1/2 of the gap.
struct TriangleInstance {
    std::uint64_t m = 0;
    Rational lp_value;
    Rational ip_value;
    Rational gap;

    explicit TriangleInstance(std::uint64_t triangles) : m(triangles) {
        if (m < 1) {
            throw ParameterError("triangle instance needs m >= 1");
        }
        const Rational mq(static_cast<long>(m));
        const Rational per_triangle_lp(3, 2);
        const Rational per_triangle_ip(1);
        lp_value = mq * per_triangle_lp;
        ip_value = mq * per_triangle_ip;
        gap = lp_value - ip_value;
    }

    // Drop of the relaxation value from fixing one triangle, by branch or cut.
    [[nodiscard]] static Rational per_triangle_closure() { return Rational(3, 2) - Rational(1); }
};

inline std::pair<SvbcParams, Rational> derive_model(std::uint64_t m) {
    const TriangleInstance inst(m);
    const Rational step = TriangleInstance::per_triangle_closure();
    return {SvbcParams(step, step, step, Decay::Constant), inst.gap};
}

// Closed-form optimum for the triangle family; k* = m with no branching.
inline CutCountAnswer optimal_plan(std::uint64_t m) {
    const auto [params, bound] = derive_model(m);
    auto ans = optimal_cuts_equal_lr(params, bound);
    if (ans.k_star != m || ans.delta_star != 0) {
        throw ModelError("triangle instance deviates from k* = m, delta* = 0");
    }
    return ans;
}

// Nodes of the pure branching tree: depth ceil(Z/r) = m.
inline std::uint64_t triangle_pure_branch_size(std::uint64_t m) {
    const auto [params, bound] = derive_model(m);
    return size_by_cut_count(bound, params.r, params.c, 0);
}

} // namespace abc
