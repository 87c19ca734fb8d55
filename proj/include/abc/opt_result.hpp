// Copyright (c) abc-tree contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>

#include "abc/bc_tree.hpp"
#include "abc/rational.hpp"

namespace abc {

// Answer record shared by the exact optimizer, the closed forms, and the
// brute-force oracle.
struct OptResult {
    Rational tau;                   // tree time
    std::uint64_t size = 0;         // node count
    std::uint64_t num_cuts = 0;     // cut nodes in the tree
    std::uint64_t branch_depth = 0; // most branch nodes on a root-to-leaf path
    std::optional<BcTree> witness;
};

} // namespace abc
