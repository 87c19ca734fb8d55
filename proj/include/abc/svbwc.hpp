// Copyright (c) abc-tree contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "abc/closed_form.hpp"
#include "abc/harmonic.hpp"
#include "abc/interval.hpp"
#include "abc/params.hpp"

// Tree sizes under harmonically decaying cuts (the k-th cut improves c/k)
// with equal branching ell = r and unit node time.

namespace abc {

// Fewest root cuts letting a depth-delta branching component prove Z when
// the k-th cut improves the bound by c/k.
inline std::uint64_t kappa_bar(const Rational& bound, const Rational& r, const Rational& c, std::uint64_t delta) {
    detail::require_positive_cut(c);
    return harmonic_inverse((bound - Rational(static_cast<long>(delta)) * r) / c);
}

// floor((Z - c)/r): deepest branching component covered by the exponential
// size bounds.
inline std::int64_t delta_hat_star(const Rational& bound, const Rational& r, const Rational& c) {
    if (r.sign() <= 0) {
        throw ParameterError("branch improvement r must be positive");
    }
    return to_int64(((bound - c) / r).floor());
}

struct SizeBounds {
    double lb = 0.0;
    double ub = 0.0;
    std::optional<std::uint64_t> exact; // set when the residual is at most c
};

// Lower/upper bounding functions of the tree size as real intervals:
//   f_lb = e^(Z_d/c - 1) + 2^(d+1) - 1,  f_ub = e^(Z_d/c) + 2^(d+1) - 2.
inline std::pair<Interval, Interval> size_bound_intervals(const Rational& bound, const Rational& r, const Rational& c,
                                                          std::uint64_t delta) {
    const Rational x = (bound - Rational(static_cast<long>(delta)) * r) / c;
    const Interval leaves(static_cast<long>(2 * detail::pow2(static_cast<std::int64_t>(delta))));
    const Interval lb = Interval::exp(x - Rational(1)) + leaves - Interval(1L);
    const Interval ub = Interval::exp(x) + leaves - Interval(2L);
    return {lb, ub};
}

inline SizeBounds size_bounds(const Rational& bound, const Rational& r, const Rational& c, std::uint64_t delta) {
    detail::require_positive_cut(c);
    const Rational rest = bound - Rational(static_cast<long>(delta)) * r;
    const std::uint64_t full = 2 * detail::pow2(static_cast<std::int64_t>(delta));
    SizeBounds out;
    if (rest.sign() <= 0) {
        out.exact = full - 1;
        out.lb = out.ub = static_cast<double>(full - 1);
        return out;
    }
    if (rest <= c) {
        out.exact = full;
        out.lb = out.ub = static_cast<double>(full);
        return out;
    }
    if (static_cast<std::int64_t>(delta) > delta_hat_star(bound, r, c)) {
        throw DomainError("size bounds are unproven for depth " + std::to_string(delta));
    }
    const auto [lb, ub] = size_bound_intervals(bound, r, c, delta);
    out.lb = lb.mid();
    out.ub = ub.mid();
    return out;
}

struct ContinuousMinimizers {
    double delta_lb_c = 0.0; // minimizer of f_lb
    double delta_ub_c = 0.0; // minimizer of f_ub
};

inline ContinuousMinimizers continuous_minimizers(const Rational& bound, const Rational& r, const Rational& c) {
    detail::require_positive_cut(c);
    if (r.sign() <= 0) {
        throw ParameterError("branch improvement r must be positive");
    }
    const double z = bound.to_double();
    const double rd = r.to_double();
    const double cd = c.to_double();
    const double ln2 = std::log(2.0);
    const double head = cd * std::log(rd / (cd * ln2)) + z;
    const double denom = rd + cd * ln2;
    ContinuousMinimizers m;
    m.delta_lb_c = (head - cd * (1.0 + ln2)) / denom;
    m.delta_ub_c = (head - cd * ln2) / denom;
    const double gap = m.delta_ub_c - m.delta_lb_c;
    if (!(gap > 0.0 && gap < 1.5) || std::abs(gap - cd / denom) > 1e-9 * std::max(1.0, std::abs(m.delta_ub_c))) {
        throw DomainError("continuous minimizer gap out of range");
    }
    return m;
}

struct SvbwcCandidate {
    std::uint64_t delta = 0;
    std::uint64_t cuts = 0;
    std::uint64_t size = 0;
};

struct SvbwcPlan {
    std::uint64_t chosen_delta = 0;
    std::uint64_t num_cuts = 0;
    std::uint64_t tree_size = 0;
    std::vector<SvbwcCandidate> candidates; // delta_1, delta_2, delta_3 in that order
    double delta_bar_c = 0.0;
    std::int64_t delta_hat_star = 0;
};

// Approximate cut count: evaluate the roundings of the continuous minimizer
// of f_ub and the first depth past the bounds' range, keep the smallest tree.
inline SvbwcPlan approx_cut_count(const Rational& bound, const Rational& r, const Rational& c) {
    SvbwcPlan plan;
    plan.delta_bar_c = continuous_minimizers(bound, r, c).delta_ub_c;
    plan.delta_hat_star = delta_hat_star(bound, r, c);
    const auto clamp = [](double d) { return d <= 0.0 ? std::uint64_t{0} : static_cast<std::uint64_t>(d); };
    const std::uint64_t deltas[] = {
        clamp(std::floor(plan.delta_bar_c)),
        clamp(std::ceil(plan.delta_bar_c)),
        plan.delta_hat_star + 1 <= 0 ? 0 : static_cast<std::uint64_t>(plan.delta_hat_star + 1),
    };
    for (const auto d : deltas) {
        SvbwcCandidate cand;
        cand.delta = d;
        cand.cuts = kappa_bar(bound, r, c, d);
        cand.size = cand.cuts + 2 * detail::pow2(static_cast<std::int64_t>(d)) - 1;
        plan.candidates.push_back(cand);
    }
    const SvbwcCandidate* best = &plan.candidates.front();
    for (const auto& cand : plan.candidates) {
        if (cand.size < best->size) {
            best = &cand;
        }
    }
    plan.chosen_delta = best->delta;
    plan.num_cuts = best->cuts;
    plan.tree_size = best->size;
    return plan;
}

inline SvbwcPlan approx_cut_count(const SvbcParams& params, const Rational& bound) {
    if (!params.equal_branching()) {
        throw ParameterError("approximate cut count requires l = r (got " + params.str() + ")");
    }
    return approx_cut_count(bound, params.r, params.c);
}

// max{8, e^(1 + r/c)}: guaranteed ratio of the approximate plan to the optimum.
inline Interval approximation_factor(const Rational& r, const Rational& c) {
    detail::require_positive_cut(c);
    const Interval e = Interval::exp(Rational(1) + r / c);
    if (e.certainly_ge(Rational(8))) {
        return e;
    }
    if (e.certainly_le(Rational(8))) {
        return Interval(8L);
    }
    throw DomainError("approximation factor undecided");
}

} // namespace abc
