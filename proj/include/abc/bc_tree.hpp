// Copyright (c) abc-tree contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "abc/params.hpp"
#include "abc/rational.hpp"
#include "abc/time_fn.hpp"

namespace abc {

enum class NodeKind : std::uint8_t { Leaf, Cut, Branch };

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct BcNode {
    NodeKind kind = NodeKind::Leaf;
    std::array<NodeId, 2> children{kNoNode, kNoNode};
    NodeId parent = kNoNode;
    Rational gap;                  // bound improvement relative to the root
    std::uint64_t cuts_on_path = 0; // cut nodes strictly above this node
};

// Rooted branch-and-cut tree stored in an arena. Gap labels are materialized
// from the parameters as nodes are expanded: a cut adds the strength of the
// k-th cut on the path, a branch adds ell (left child) and r (right child).
class BcTree {
  public:
    explicit BcTree(SvbcParams params) : params_(std::move(params)) {
        params_.validate();
        nodes_.emplace_back();
    }

    [[nodiscard]] NodeId root() const { return 0; }
    [[nodiscard]] std::size_t size() const { return nodes_.size(); }
    [[nodiscard]] const BcNode& node(NodeId id) const { return nodes_.at(id); }
    [[nodiscard]] std::span<const BcNode> nodes() const { return nodes_; }
    [[nodiscard]] const SvbcParams& params() const { return params_; }

    // Turns a leaf into a cut node; returns its only child.
    NodeId add_cut(NodeId leaf) {
        expect_leaf(leaf);
        const std::uint64_t k = nodes_[leaf].cuts_on_path + 1;
        BcNode child;
        child.parent = leaf;
        child.gap = nodes_[leaf].gap + params_.cut_strength(k);
        child.cuts_on_path = k;
        const auto id = push(std::move(child));
        nodes_[leaf].kind = NodeKind::Cut;
        nodes_[leaf].children[0] = id;
        return id;
    }

    // Turns a leaf into a branch node; returns (left, right).
    std::pair<NodeId, NodeId> add_branch(NodeId leaf) {
        expect_leaf(leaf);
        BcNode left;
        left.parent = leaf;
        left.gap = nodes_[leaf].gap + params_.ell;
        left.cuts_on_path = nodes_[leaf].cuts_on_path;
        BcNode right = left;
        right.gap = nodes_[leaf].gap + params_.r;
        const auto l = push(std::move(left));
        const auto r = push(std::move(right));
        nodes_[leaf].kind = NodeKind::Branch;
        nodes_[leaf].children = {l, r};
        return {l, r};
    }

    [[nodiscard]] std::size_t count(NodeKind kind) const {
        return static_cast<std::size_t>(
            std::count_if(nodes_.begin(), nodes_.end(), [&](const BcNode& n) { return n.kind == kind; }));
    }
    [[nodiscard]] std::size_t num_cuts() const { return count(NodeKind::Cut); }

    // Most branch nodes on any root-to-leaf path.
    [[nodiscard]] std::uint64_t branch_depth() const {
        std::vector<std::uint64_t> depth(nodes_.size(), 0);
        std::uint64_t best = 0;
        // Children always have larger ids than their parent.
        for (NodeId id = 0; id < nodes_.size(); ++id) {
            const auto& n = nodes_[id];
            for (auto ch : n.children) {
                if (ch != kNoNode) {
                    depth[ch] = depth[id] + (n.kind == NodeKind::Branch ? 1 : 0);
                }
            }
            best = std::max(best, depth[id]);
        }
        return best;
    }

    // All cut nodes precede the first branch node.
    [[nodiscard]] bool is_cut_and_branch() const {
        // A cut chain hanging below a branch is caught at its topmost cut.
        for (const auto& n : nodes_) {
            if (n.kind == NodeKind::Cut && n.parent != kNoNode && nodes_[n.parent].kind == NodeKind::Branch) {
                return false;
            }
        }
        return true;
    }

    // Every root-to-leaf path carries the same number of cuts.
    [[nodiscard]] bool has_uniform_cut_count() const {
        std::optional<std::uint64_t> seen;
        for (const auto& n : nodes_) {
            if (n.kind != NodeKind::Leaf) {
                continue;
            }
            if (seen && *seen != n.cuts_on_path) {
                return false;
            }
            seen = n.cuts_on_path;
        }
        return true;
    }

    // Throws ModelError describing the first violated structural invariant.
    void check_invariants() const {
        if (nodes_.empty() || !nodes_[0].gap.is_zero() || nodes_[0].cuts_on_path != 0) {
            throw ModelError("root must have gap 0 and no cuts above it");
        }
        for (NodeId id = 0; id < nodes_.size(); ++id) {
            const auto& n = nodes_[id];
            const auto nch = std::count_if(n.children.begin(), n.children.end(), [](NodeId c) { return c != kNoNode; });
            const long want = n.kind == NodeKind::Leaf ? 0 : (n.kind == NodeKind::Cut ? 1 : 2);
            if (nch != want || (n.kind == NodeKind::Cut && n.children[0] == kNoNode)) {
                throw ModelError("node " + std::to_string(id) + " has the wrong number of children");
            }
            for (std::size_t i = 0; i < 2; ++i) {
                const NodeId ch = n.children[i];
                if (ch == kNoNode) {
                    continue;
                }
                if (ch <= id || ch >= nodes_.size() || nodes_[ch].parent != id) {
                    throw ModelError("node " + std::to_string(id) + " has a malformed child link");
                }
                const auto& c = nodes_[ch];
                Rational expected_gap;
                std::uint64_t expected_cuts = n.cuts_on_path;
                if (n.kind == NodeKind::Cut) {
                    expected_cuts += 1;
                    expected_gap = n.gap + params_.cut_strength(expected_cuts);
                } else {
                    expected_gap = n.gap + (i == 0 ? params_.ell : params_.r);
                }
                if (c.gap != expected_gap || c.cuts_on_path != expected_cuts) {
                    throw ModelError("node " + std::to_string(ch) + " carries an inconsistent label");
                }
                if (c.gap < n.gap) {
                    throw ModelError("gap decreases along the path to node " + std::to_string(ch));
                }
            }
        }
    }

  private:
    SvbcParams params_;
    std::vector<BcNode> nodes_;

    void expect_leaf(NodeId id) const {
        if (id >= nodes_.size() || nodes_[id].kind != NodeKind::Leaf) {
            throw ModelError("node " + std::to_string(id) + " is not a leaf and cannot be expanded");
        }
    }

    NodeId push(BcNode n) {
        if (nodes_.size() >= kNoNode - 1) {
            throw DomainError("tree exceeds the node-id range");
        }
        nodes_.push_back(std::move(n));
        return static_cast<NodeId>(nodes_.size() - 1);
    }
};

// True iff every leaf has gap >= bound.
inline bool proves_bound(const BcTree& t, const Rational& bound) {
    return std::all_of(t.nodes().begin(), t.nodes().end(),
                       [&](const BcNode& n) { return n.kind != NodeKind::Leaf || n.gap >= bound; });
}

// Sum over nodes of w(cuts on the node's root path).
inline Rational tree_time(const BcTree& t, const TimeFn& w) {
    std::uint64_t zmax = 0;
    for (const auto& n : t.nodes()) {
        zmax = std::max(zmax, n.cuts_on_path);
    }
    const auto wv = w.values(zmax);
    std::vector<std::uint64_t> per_level(zmax + 1, 0);
    for (const auto& n : t.nodes()) {
        ++per_level[n.cuts_on_path];
    }
    Rational total(0);
    for (std::uint64_t z = 0; z <= zmax; ++z) {
        if (per_level[z] != 0) {
            total += wv[z] * Rational(static_cast<long>(per_level[z]));
        }
    }
    return total;
}

// A path of k cuts from the root followed by a complete branching component
// of the given depth.
inline BcTree build_cut_and_branch(const SvbcParams& params, std::uint64_t k, std::uint64_t depth) {
    if (depth > 24) {
        throw DomainError("branching depth " + std::to_string(depth) + " is too large to materialize");
    }
    BcTree t(params);
    NodeId cur = t.root();
    for (std::uint64_t i = 0; i < k; ++i) {
        cur = t.add_cut(cur);
    }
    std::vector<NodeId> frontier{cur};
    for (std::uint64_t d = 0; d < depth; ++d) {
        std::vector<NodeId> next;
        next.reserve(frontier.size() * 2);
        for (auto id : frontier) {
            auto [l, r] = t.add_branch(id);
            next.push_back(l);
            next.push_back(r);
        }
        frontier = std::move(next);
    }
    return t;
}

// k cuts at the root, then branching on every node whose gap is still below
// the bound. Requires ell > 0 unless the cuts alone prove the bound.
inline BcTree build_root_cuts_then_branch(const SvbcParams& params, std::uint64_t k, const Rational& bound,
                                          std::size_t max_nodes = 1u << 24) {
    BcTree t(params);
    NodeId cur = t.root();
    for (std::uint64_t i = 0; i < k && t.node(cur).gap < bound; ++i) {
        cur = t.add_cut(cur);
    }
    std::vector<NodeId> stack{cur};
    while (!stack.empty()) {
        const NodeId id = stack.back();
        stack.pop_back();
        if (t.node(id).gap >= bound) {
            continue;
        }
        if (!params.can_branch()) {
            throw InfeasibleError("branching with l=0 cannot prove the bound");
        }
        if (t.size() + 2 > max_nodes) {
            throw DomainError("tree exceeds " + std::to_string(max_nodes) + " nodes");
        }
        auto [l, r] = t.add_branch(id);
        stack.push_back(r);
        stack.push_back(l);
    }
    return t;
}

inline BcTree pure_branch_tree(const SvbcParams& params, const Rational& bound) {
    return build_root_cuts_then_branch(params, 0, bound);
}

inline BcTree pure_cut_tree(const SvbcParams& params, const Rational& bound) {
    if (bound.sign() > 0 && !params.can_cut()) {
        throw InfeasibleError("cuts with c=0 cannot prove the bound");
    }
    BcTree t(params);
    NodeId cur = t.root();
    while (t.node(cur).gap < bound) {
        cur = t.add_cut(cur);
    }
    return t;
}

// Graphviz rendering: cut nodes are boxes, branch nodes circles, leaves
// ellipses; labels read "g=<gap> z=<cuts on path>".
inline std::string to_dot(const BcTree& t) {
    std::ostringstream os;
    os << "digraph BcTree {\n";
    for (NodeId id = 0; id < t.size(); ++id) {
        const auto& n = t.node(id);
        const char* shape = n.kind == NodeKind::Cut ? "box" : (n.kind == NodeKind::Branch ? "circle" : "ellipse");
        os << "  n" << id << " [label=\"g=" << n.gap.str() << " z=" << n.cuts_on_path << "\", shape=" << shape
           << "];\n";
    }
    for (NodeId id = 0; id < t.size(); ++id) {
        for (auto ch : t.node(id).children) {
            if (ch != kNoNode) {
                os << "  n" << id << " -> n" << ch << ";\n";
            }
        }
    }
    os << "}\n";
    return os.str();
}

} // namespace abc
