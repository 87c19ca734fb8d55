// Copyright (c) abc-tree contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

#include "abc/interval.hpp"
#include "abc/rational.hpp"

namespace abc {

// Exact k-th harmonic number H(k) = sum_{i=1..k} 1/i, H(0) = 0.
inline Rational harmonic(std::uint64_t k) {
    mpq_class h(0);
    for (std::uint64_t i = 1; i <= k; ++i) {
        mpq_class term(1, static_cast<unsigned long>(i));
        h += term;
    }
    return Rational::from_mpq(h);
}

namespace detail {

// Below this index H(k) is summed exactly; above it the asymptotic
// enclosure is used.
inline constexpr std::uint64_t kHarmonicExactLimit = 64;

// Exact fallback is refused past this index (denominators grow like lcm(1..k)).
inline constexpr std::uint64_t kHarmonicFallbackLimit = 20000;

} // namespace detail

// Interval guaranteed to contain H(k).
//   H(k) = ln k + g + 1/(2k) - 1/(12k^2) + 1/(120k^4) - 1/(252k^6) + R,
//   0 < R < 1/(240k^8), g = Euler-Mascheroni constant.
inline Interval harmonic_enclosure(std::uint64_t k) {
    if (k <= detail::kHarmonicExactLimit) {
        return Interval(harmonic(k));
    }
    const mpz_class kz(static_cast<unsigned long>(k));
    auto inv_pow = [&](unsigned e, unsigned long scale) {
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), kz.get_mpz_t(), e);
        p *= scale;
        return Rational::from_mpq(mpq_class(mpz_class(1), p));
    };
    const Rational series = inv_pow(1, 2) - inv_pow(2, 12) + inv_pow(4, 120) - inv_pow(6, 252);
    const Rational k_rat = Rational::from_mpq(mpq_class(kz));
    Interval s = Interval::log(k_rat) + Interval::euler_gamma() + Interval(series);
    return s.widen_up(Interval(inv_pow(8, 240)));
}

// Certified H(k) >= x.
inline bool harmonic_geq(std::uint64_t k, const Rational& x) {
    if (k <= detail::kHarmonicExactLimit) {
        return harmonic(k) >= x;
    }
    const Interval h = harmonic_enclosure(k);
    if (h.certainly_ge(x)) {
        return true;
    }
    if (h.certainly_lt(x)) {
        return false;
    }
    if (k <= detail::kHarmonicFallbackLimit) {
        return harmonic(k) >= x;
    }
    throw DomainError("cannot certify H(" + std::to_string(k) + ") against " + x.str());
}

// Least k >= 0 with H(k) >= x.
//
// For x > 1 the search is bracketed by e^(x-1) <= H^-1(x) < e^x - 1 and
// finished by bisection on the certified predicate harmonic_geq, so the
// result is exact.
inline std::uint64_t harmonic_inverse(const Rational& x) {
    if (x.sign() <= 0) {
        return 0;
    }
    if (x <= Rational(1)) {
        return 1;
    }
    if (x > Rational(42)) {
        throw DomainError("harmonic inverse of " + x.str() + " exceeds 64-bit range");
    }
    const double xd = x.to_double();
    auto lo = static_cast<std::uint64_t>(std::max(1.0, std::floor(std::exp(xd - 1.0) * (1.0 - 1e-9)) - 2.0));
    auto hi = static_cast<std::uint64_t>(std::ceil(std::exp(xd) * (1.0 + 1e-9))) + 2;
    while (!harmonic_geq(hi, x)) {
        hi *= 2;
    }
    while (lo > 1 && harmonic_geq(lo - 1, x)) {
        lo = lo > 16 ? lo / 2 : lo - 1;
    }
    // Invariant: H(hi) >= x, and lo == 1 or H(lo - 1) < x.
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (harmonic_geq(mid, x)) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

} // namespace abc
