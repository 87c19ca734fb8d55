// Copyright (c) abc-tree contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "abc/harmonic.hpp"
#include "abc/rational.hpp"

namespace abc {

enum class Decay : std::uint8_t {
    Constant, // every cut improves the bound by c
    Harmonic, // the k-th cut on a path improves the bound by c/k
};

inline std::string_view to_string(Decay d) { return d == Decay::Constant ? "constant" : "harmonic"; }

inline Decay parse_decay(std::string_view s) {
    if (s == "constant") {
        return Decay::Constant;
    }
    if (s == "harmonic") {
        return Decay::Harmonic;
    }
    throw ParseError("unknown decay '" + std::string(s) + "' (expected constant|harmonic)");
}

// Branch improvements (ell, r) and cut improvement c of the single-variable
// model, normalized so that 0 <= ell <= r.
struct SvbcParams {
    Rational ell;
    Rational r;
    Rational c;
    Decay decay = Decay::Constant;

    SvbcParams() = default;
    SvbcParams(Rational ell_, Rational r_, Rational c_, Decay decay_ = Decay::Constant)
        : ell(std::move(ell_)), r(std::move(r_)), c(std::move(c_)), decay(decay_) {
        validate();
    }

    void validate() const {
        if (ell.sign() < 0 || r < ell) {
            throw ParameterError("branch improvements must satisfy 0 <= l <= r (got l=" + ell.str() +
                                 ", r=" + r.str() + ")");
        }
        if (c.sign() < 0) {
            throw ParameterError("cut improvement must be nonnegative (got c=" + c.str() + ")");
        }
    }

    [[nodiscard]] bool can_cut() const { return c.sign() > 0; }
    // Branching with ell = 0 reproduces the parent's subproblem on the left.
    [[nodiscard]] bool can_branch() const { return ell.sign() > 0; }
    [[nodiscard]] bool equal_branching() const { return ell == r; }

    // Improvement of the k-th cut on a root path (k >= 1).
    [[nodiscard]] Rational cut_strength(std::uint64_t k) const {
        if (decay == Decay::Constant) {
            return c;
        }
        return c / Rational(static_cast<long>(k));
    }

    // Total improvement of z cuts on one path.
    [[nodiscard]] Rational cut_bound(std::uint64_t z) const {
        if (decay == Decay::Constant) {
            return c * Rational(static_cast<long>(z));
        }
        return c * harmonic(z);
    }

    // Fewest cuts on a path whose total improvement reaches `residual`;
    // nullopt when cuts cannot get there (c = 0 and residual > 0).
    [[nodiscard]] std::optional<std::uint64_t> cuts_needed(const Rational& residual) const {
        if (residual.sign() <= 0) {
            return 0;
        }
        if (!can_cut()) {
            return std::nullopt;
        }
        const Rational ratio = residual / c;
        if (decay == Decay::Constant) {
            return to_uint64(ratio.ceil());
        }
        return harmonic_inverse(ratio);
    }

    [[nodiscard]] std::string str() const {
        return "l=" + ell.str() + " r=" + r.str() + " c=" + c.str() + " decay=" + std::string(to_string(decay));
    }
};

} // namespace abc
