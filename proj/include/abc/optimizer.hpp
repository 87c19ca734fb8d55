// Copyright (c) abc-tree contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "abc/bc_tree.hpp"
#include "abc/opt_result.hpp"
#include "abc/params.hpp"
#include "abc/time_fn.hpp"

namespace abc {

struct DpOptions {
    std::size_t max_states = 10'000'000;      // memo cells across all residuals
    bool build_witness = true;
    std::size_t max_witness_nodes = 1'000'000; // witness is skipped above this size
};

namespace detail {

inline constexpr std::uint64_t kNever = std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return (a > kNever - b) ? kNever : a + b;
}

// The positive residuals Z - a*ell - b*r reachable by branching alone, in
// ascending order. A DP state is (residual index, z): its true residual is
// values[i] minus the improvement of z cuts, so the pair identifies the
// state exactly under either decay mode.
struct BranchLattice {
    std::vector<Rational> values;
    std::vector<std::int64_t> left;  // index of values[i] - ell, or -1 when that is <= 0
    std::vector<std::int64_t> right; // index of values[i] - r, or -1 when that is <= 0
    std::vector<std::uint64_t> need; // cuts closing values[i]; kNever if cuts cannot
    std::int64_t root = -1;

    BranchLattice(const SvbcParams& params, const Rational& bound, std::size_t max_size) {
        if (bound.sign() <= 0) {
            return;
        }
        std::set<Rational> seen{bound};
        std::vector<Rational> todo{bound};
        while (!todo.empty() && params.can_branch()) {
            const Rational b = todo.back();
            todo.pop_back();
            for (const Rational* step : {&params.ell, &params.r}) {
                Rational child = b - *step;
                if (child.sign() > 0 && seen.insert(child).second) {
                    if (seen.size() > max_size) {
                        throw DomainError("residual lattice exceeds the state cap of " + std::to_string(max_size));
                    }
                    todo.push_back(std::move(child));
                }
            }
        }
        values.assign(seen.begin(), seen.end());
        std::map<Rational, std::int64_t> index;
        for (std::size_t i = 0; i < values.size(); ++i) {
            index.emplace(values[i], static_cast<std::int64_t>(i));
        }
        const auto find = [&](const Rational& v) -> std::int64_t {
            if (v.sign() <= 0) {
                return -1;
            }
            return index.at(v);
        };
        left.resize(values.size(), -1);
        right.resize(values.size(), -1);
        need.resize(values.size(), kNever);
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (params.can_branch()) {
                left[i] = find(values[i] - params.ell);
                right[i] = find(values[i] - params.r);
            }
            need[i] = params.cuts_needed(values[i]).value_or(kNever);
        }
        root = index.at(bound);
    }

    [[nodiscard]] std::size_t size() const { return values.size(); }
};

// Cut-and-branch tree: k root cuts, then branching wherever the residual is
// still positive. Node counts per residual are computed bottom-up.
struct PureBranchCount {
    std::uint64_t size = kNever;
    std::uint64_t depth = 0;
};

inline PureBranchCount pure_branch_after_cuts(const SvbcParams& params, const BranchLattice& lat, std::uint64_t k) {
    if (lat.root < 0) {
        return {1, 0};
    }
    std::vector<PureBranchCount> cnt(lat.size());
    const auto at = [&](std::int64_t j) { return j < 0 ? PureBranchCount{1, 0} : cnt[static_cast<std::size_t>(j)]; };
    for (std::size_t i = 0; i < lat.size(); ++i) {
        if (lat.need[i] <= k) {
            cnt[i] = {1, 0};
        } else if (params.can_branch()) {
            const auto l = at(lat.left[i]);
            const auto r = at(lat.right[i]);
            cnt[i] = {sat_add(1, sat_add(l.size, r.size)), 1 + std::max(l.depth, r.depth)};
        }
    }
    return cnt[static_cast<std::size_t>(lat.root)];
}

struct RootOnlyBest {
    Rational tau;
    std::uint64_t k = 0;
    PureBranchCount branch;
};

// Cheapest cut-and-branch tree. Between consecutive values of `need` the
// branching component is fixed while cut time only grows, so only k = 0 and
// the need values themselves are candidates.
inline std::optional<RootOnlyBest> best_root_only(const SvbcParams& params, const TimeFn& w,
                                                  const BranchLattice& lat) {
    if (lat.root < 0) {
        return RootOnlyBest{Rational(1), 0, {1, 0}};
    }
    std::vector<std::uint64_t> ks{0};
    for (const auto n : lat.need) {
        if (n != kNever) {
            ks.push_back(n);
        }
    }
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

    const auto table_max = w.max_z();
    std::optional<RootOnlyBest> best;
    Rational prefix(0); // sum of w(i) for i < zp
    Rational prev_w(1);
    std::uint64_t zp = 0;
    for (const auto k : ks) {
        if (table_max && k > *table_max) {
            break;
        }
        // Any tree with k root cuts has at least k + 1 nodes of time >= 1.
        if (best && Rational(static_cast<long>(std::min<std::uint64_t>(k, kNever / 2) + 1)) > best->tau) {
            break;
        }
        bool too_slow = false;
        while (zp < k) {
            const Rational wz = w(zp);
            if (wz < prev_w) {
                throw DomainError("time-function decreases at z=" + std::to_string(zp));
            }
            prev_w = wz;
            prefix += wz;
            ++zp;
            if (best && prefix >= best->tau) {
                too_slow = true;
                break;
            }
        }
        if (too_slow) {
            break;
        }
        const auto branch = pure_branch_after_cuts(params, lat, k);
        if (branch.size == kNever) {
            continue;
        }
        const Rational wk = w(k);
        if (wk < prev_w) {
            throw DomainError("time-function decreases at z=" + std::to_string(k));
        }
        Rational tau = prefix + wk * Rational(static_cast<long>(branch.size));
        if (!best || tau < best->tau) {
            best = RootOnlyBest{std::move(tau), k, branch};
        }
    }
    return best;
}

inline OptResult trivial_result(const SvbcParams& params, bool build_witness) {
    OptResult res;
    res.tau = Rational(1);
    res.size = 1;
    if (build_witness) {
        res.witness.emplace(params);
    }
    return res;
}

inline void require_provable(const SvbcParams& params, const Rational& bound) {
    params.validate();
    if (bound.sign() > 0 && !params.can_cut() && !params.can_branch()) {
        throw InfeasibleError("bound " + bound.str() + " is unprovable with " + params.str());
    }
}

} // namespace detail

// Minimum tree time over cut-and-branch trees (all cuts at the root).
inline OptResult min_tree_time_root_cuts_only(const SvbcParams& params, const TimeFn& w, const Rational& bound,
                                              const DpOptions& opts = {}) {
    detail::require_provable(params, bound);
    if (bound.sign() <= 0) {
        return detail::trivial_result(params, opts.build_witness);
    }
    const detail::BranchLattice lat(params, bound, opts.max_states);
    const auto best = detail::best_root_only(params, w, lat);
    if (!best) {
        throw InfeasibleError("no cut-and-branch tree proves " + bound.str() + " within the time-function domain");
    }
    OptResult res;
    res.tau = best->tau;
    res.num_cuts = best->k;
    res.size = detail::sat_add(best->k, best->branch.size);
    res.branch_depth = best->branch.depth;
    if (opts.build_witness && res.size <= opts.max_witness_nodes) {
        res.witness = build_root_cuts_then_branch(params, best->k, bound, opts.max_witness_nodes);
    }
    return res;
}

// Time of the pure branching tree; nullopt when ell = 0.
inline std::optional<Rational> pure_branch_time(const SvbcParams& params, const Rational& bound) {
    params.validate();
    if (bound.sign() <= 0) {
        return Rational(1);
    }
    if (!params.can_branch()) {
        return std::nullopt;
    }
    // All nodes sit at z = 0, where w = 1.
    auto no_cuts = params;
    no_cuts.c = Rational(0);
    const detail::BranchLattice lat(no_cuts, bound, std::numeric_limits<std::size_t>::max());
    return Rational(static_cast<long>(detail::pure_branch_after_cuts(no_cuts, lat, 0).size));
}

// Time of the pure cutting tree; nullopt when c = 0.
inline std::optional<Rational> pure_cut_time(const SvbcParams& params, const TimeFn& w, const Rational& bound) {
    params.validate();
    const auto k = params.cuts_needed(bound);
    if (!k) {
        return std::nullopt;
    }
    Rational total(0);
    for (const auto& v : w.values(*k)) {
        total += v;
    }
    return total;
}

// Exact minimum tree time over all trees of the model.
//
// T(g, z) = w(z)                                      if g <= 0
//         = min( w(z) + T(g - cut_{z+1}, z + 1),      (cut)
//                w(z) + T(g - ell, z) + T(g - r, z) ) (branch)
//
// The residual g is tracked as (branch residual, z); the cut depth z is
// capped where the prefix of node times alone exceeds the best
// cut-and-branch tree, which is an upper bound on the optimum. Ties prefer
// the cut.
inline OptResult min_tree_time(const SvbcParams& params, const TimeFn& w, const Rational& bound,
                               const DpOptions& opts = {}) {
    using detail::kNever;
    detail::require_provable(params, bound);
    if (bound.sign() <= 0) {
        return detail::trivial_result(params, opts.build_witness);
    }
    const detail::BranchLattice lat(params, bound, opts.max_states);
    const auto upper = detail::best_root_only(params, w, lat);
    if (!upper) {
        throw InfeasibleError("no tree proves " + bound.str() + " within the time-function domain");
    }

    const auto root = static_cast<std::size_t>(lat.root);
    const std::uint64_t deepest_need = lat.need[root];
    const auto table_max = w.max_z();
    std::uint64_t zcap = 0;
    {
        Rational prefix(0);
        for (std::uint64_t z = 0;; ++z) {
            prefix += w(z);
            if (prefix > upper->tau) {
                zcap = z - 1; // z >= 1 here since w(0) = 1 <= tau
                break;
            }
            if (z == deepest_need || (table_max && z == *table_max)) {
                zcap = z;
                break;
            }
        }
    }
    const auto wv = w.values(zcap);

    struct Cell {
        Rational tau;
        std::uint64_t size = kNever;
        std::uint64_t cuts = 0;
        std::uint64_t depth = 0;
        bool cut = false;
        [[nodiscard]] bool feasible() const { return size != kNever; }
    };
    std::vector<std::vector<Cell>> memo(lat.size());
    std::size_t states = 0;
    for (std::size_t i = 0; i < lat.size(); ++i) {
        const std::uint64_t top = std::min(lat.need[i], zcap);
        states += top + 1;
        if (states > opts.max_states) {
            throw DomainError("dynamic program exceeds the state cap of " + std::to_string(opts.max_states));
        }
    }
    const auto leaf = [&](std::uint64_t z) { return Cell{wv[z], 1, 0, 0, false}; };
    const auto lookup = [&](std::int64_t j, std::uint64_t z) -> Cell {
        if (j < 0 || z >= lat.need[static_cast<std::size_t>(j)]) {
            return leaf(z);
        }
        return memo[static_cast<std::size_t>(j)][z];
    };

    for (std::size_t i = 0; i < lat.size(); ++i) {
        const std::uint64_t top = std::min(lat.need[i], zcap);
        auto& row = memo[i];
        row.resize(top + 1);
        for (std::uint64_t z = top + 1; z-- > 0;) {
            if (z >= lat.need[i]) {
                row[z] = leaf(z);
                continue;
            }
            Cell best;
            if (params.can_cut() && z + 1 <= zcap && row[z + 1].feasible()) {
                const auto& ch = row[z + 1];
                best = Cell{wv[z] + ch.tau, detail::sat_add(ch.size, 1), ch.cuts + 1, ch.depth, true};
            }
            if (params.can_branch()) {
                const Cell l = lookup(lat.left[i], z);
                const Cell r = lookup(lat.right[i], z);
                if (l.feasible() && r.feasible()) {
                    Rational tau = wv[z] + l.tau + r.tau;
                    if (!best.feasible() || tau < best.tau) {
                        best = Cell{std::move(tau), detail::sat_add(1, detail::sat_add(l.size, r.size)),
                                    l.cuts + r.cuts, 1 + std::max(l.depth, r.depth), false};
                    }
                }
            }
            row[z] = std::move(best);
        }
    }

    const Cell& top = memo[root][0];
    if (!top.feasible()) {
        throw InfeasibleError("no tree proves " + bound.str() + " within the time-function domain");
    }
    OptResult res;
    res.tau = top.tau;
    res.size = top.size;
    res.num_cuts = top.cuts;
    res.branch_depth = top.depth;
    if (opts.build_witness && res.size <= opts.max_witness_nodes) {
        BcTree t(params);
        std::vector<std::tuple<NodeId, std::int64_t, std::uint64_t>> stack{{t.root(), lat.root, 0}};
        while (!stack.empty()) {
            const auto [node, i, z] = stack.back();
            stack.pop_back();
            if (i < 0 || z >= lat.need[static_cast<std::size_t>(i)]) {
                continue;
            }
            const auto iu = static_cast<std::size_t>(i);
            if (memo[iu][z].cut) {
                stack.emplace_back(t.add_cut(node), i, z + 1);
            } else {
                const auto [l, r] = t.add_branch(node);
                stack.emplace_back(r, lat.right[iu], z);
                stack.emplace_back(l, lat.left[iu], z);
            }
        }
        res.witness = std::move(t);
    }
    return res;
}

// Smallest t in [0, k] minimizing w(t) - sum_{i<t} w(i): how many of k cuts
// per path to place above the first branch node.
inline std::uint64_t optimal_prefix_cuts(const TimeFn& w, std::uint64_t k) {
    const auto wv = w.values(k);
    Rational prefix(0);
    std::uint64_t best_t = 0;
    Rational best_val = wv[0];
    for (std::uint64_t t = 1; t <= k; ++t) {
        prefix += wv[t - 1];
        Rational val = wv[t] - prefix;
        if (val < best_val) {
            best_val = std::move(val);
            best_t = t;
        }
    }
    return best_t;
}

// Scans Z = step, 2 step, ..., z_max and returns the smallest grid point Z*
// such that for every grid Z >= Z* every time-minimal tree has a cut, i.e.
// the pure branching tree is strictly slower than the optimum. nullopt when
// the largest grid point does not force a cut.
inline std::optional<Rational> cut_threshold_search(const SvbcParams& params, const TimeFn& w,
                                                    const Rational& z_max, const Rational& step,
                                                    const DpOptions& opts = {}) {
    if (w.kind() == TimeFn::Kind::Table) {
        throw ParameterError("threshold search needs a time-function defined for every z");
    }
    if (step.sign() <= 0) {
        throw ParameterError("threshold search step must be positive");
    }
    DpOptions dp = opts;
    dp.build_witness = false;
    std::optional<Rational> threshold;
    for (Rational z = step; z <= z_max; z += step) {
        const auto opt = min_tree_time(params, w, z, dp);
        const auto branch = pure_branch_time(params, z);
        const bool forced = !branch || opt.tau < *branch;
        if (forced && opt.num_cuts == 0) {
            throw ModelError("optimum below pure branching time has no cuts");
        }
        if (forced) {
            if (!threshold) {
                threshold = z;
            }
        } else {
            threshold.reset();
        }
    }
    return threshold;
}

} // namespace abc
