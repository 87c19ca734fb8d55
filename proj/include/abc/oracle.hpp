// Copyright (c) abc-tree contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "abc/bc_tree.hpp"
#include "abc/opt_result.hpp"
#include "abc/params.hpp"
#include "abc/time_fn.hpp"

// Brute-force search over every tree shape up to the given limits. It walks
// gap labels forward from the root exactly as the tree definition does and
// keeps no memo table, so it shares no machinery with the optimizer beyond
// the tree model itself.

namespace abc {

struct EnumLimits {
    std::uint64_t max_depth = 12;         // edges on any root-to-leaf path
    std::uint64_t max_nodes = 1u << 20;   // nodes in the returned tree
    std::uint64_t max_cuts_per_path = 12; // cut nodes on any root-to-leaf path
};

namespace detail {

struct Shape {
    NodeKind kind = NodeKind::Leaf;
    std::unique_ptr<Shape> first;
    std::unique_ptr<Shape> second;
};

struct Found {
    Rational tau;
    std::uint64_t nodes = 0;
    std::unique_ptr<Shape> shape;
};

class Enumerator {
  public:
    Enumerator(const SvbcParams& params, const TimeFn& w, const Rational& bound, const EnumLimits& limits)
        : params_(params), w_(w), bound_(bound), limits_(limits) {}

    // Cheapest subtree rooted at a node with the given gap and cuts above it.
    std::optional<Found> search(const Rational& gap, std::uint64_t cuts, std::uint64_t depth) {
        const Rational here = w_(cuts);
        if (gap >= bound_) {
            return Found{here, 1, std::make_unique<Shape>()};
        }
        if (depth >= limits_.max_depth) {
            return std::nullopt;
        }
        std::optional<Found> best;
        if (params_.c.sign() > 0 && cuts < limits_.max_cuts_per_path) {
            if (auto child = search(gap + params_.cut_strength(cuts + 1), cuts + 1, depth + 1)) {
                auto s = std::make_unique<Shape>();
                s->kind = NodeKind::Cut;
                s->first = std::move(child->shape);
                best = Found{here + child->tau, child->nodes + 1, std::move(s)};
            }
        }
        auto left = search(gap + params_.ell, cuts, depth + 1);
        if (left) {
            auto right = search(gap + params_.r, cuts, depth + 1);
            if (right) {
                Rational tau = here + left->tau + right->tau;
                if (!best || tau < best->tau) {
                    auto s = std::make_unique<Shape>();
                    s->kind = NodeKind::Branch;
                    s->first = std::move(left->shape);
                    s->second = std::move(right->shape);
                    best = Found{std::move(tau), 1 + left->nodes + right->nodes, std::move(s)};
                }
            }
        }
        return best;
    }

  private:
    const SvbcParams& params_;
    const TimeFn& w_;
    const Rational& bound_;
    EnumLimits limits_;
};

inline void materialize(BcTree& t, NodeId at, const Shape& s) {
    std::vector<std::pair<NodeId, const Shape*>> stack{{at, &s}};
    while (!stack.empty()) {
        const auto [id, sh] = stack.back();
        stack.pop_back();
        if (sh->kind == NodeKind::Cut) {
            stack.emplace_back(t.add_cut(id), sh->first.get());
        } else if (sh->kind == NodeKind::Branch) {
            const auto [l, r] = t.add_branch(id);
            stack.emplace_back(l, sh->first.get());
            stack.emplace_back(r, sh->second.get());
        }
    }
}

} // namespace detail

// Minimum tree time by exhaustive search. Throws InfeasibleError when no
// tree within the limits proves the bound, and ParameterError when the pure
// branching proof is already deeper than max_depth.
inline OptResult enumerate_min(const SvbcParams& params, const TimeFn& w, const Rational& bound,
                               const EnumLimits& limits = {}) {
    params.validate();
    if (limits.max_depth < 1 || limits.max_nodes < 1 || limits.max_cuts_per_path < 1) {
        throw ParameterError("enumeration limits must be at least 1");
    }
    if (bound.sign() > 0 && params.can_branch() && (bound / params.ell).ceil() > limits.max_depth) {
        throw ParameterError("pure branching needs depth " + (bound / params.ell).ceil().get_str() +
                             " > max_depth " + std::to_string(limits.max_depth));
    }
    detail::Enumerator e(params, w, bound, limits);
    auto found = e.search(Rational(0), 0, 0);
    if (!found || found->nodes > limits.max_nodes) {
        throw InfeasibleError("no tree within the enumeration limits proves " + bound.str());
    }
    BcTree t(params);
    detail::materialize(t, t.root(), *found->shape);
    OptResult res;
    res.tau = found->tau;
    res.size = t.size();
    res.num_cuts = t.num_cuts();
    res.branch_depth = t.branch_depth();
    res.witness = std::move(t);
    return res;
}

} // namespace abc
