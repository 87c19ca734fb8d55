// Copyright (c) abc-tree contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>

#include <mpfr.h>

#include "abc/rational.hpp"

namespace abc {

// Closed real interval [lo, hi] with MPFR endpoints. Every operation rounds
// the lower endpoint down and the upper endpoint up, so the true value of an
// expression always lies inside the computed interval.
class Interval {
  public:
    static constexpr mpfr_prec_t kPrecision = 256;

    Interval() { init(); mpfr_set_zero(lo_, 1); mpfr_set_zero(hi_, 1); }

    explicit Interval(const Rational& q) {
        init();
        mpfr_set_q(lo_, q.mpq().get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi_, q.mpq().get_mpq_t(), MPFR_RNDU);
    }

    explicit Interval(long n) : Interval(Rational(n)) {}

    Interval(const Interval& o) { init(); mpfr_set(lo_, o.lo_, MPFR_RNDD); mpfr_set(hi_, o.hi_, MPFR_RNDU); }
    Interval& operator=(const Interval& o) {
        if (this != &o) {
            mpfr_set(lo_, o.lo_, MPFR_RNDD);
            mpfr_set(hi_, o.hi_, MPFR_RNDU);
        }
        return *this;
    }
    Interval(Interval&& o) noexcept : Interval() { swap(o); }
    Interval& operator=(Interval&& o) noexcept { swap(o); return *this; }
    ~Interval() { mpfr_clear(lo_); mpfr_clear(hi_); }

    void swap(Interval& o) noexcept { mpfr_swap(lo_, o.lo_); mpfr_swap(hi_, o.hi_); }

    static Interval euler_gamma() {
        Interval r;
        mpfr_const_euler(r.lo_, MPFR_RNDD);
        mpfr_const_euler(r.hi_, MPFR_RNDU);
        return r;
    }

    static Interval ln2() {
        Interval r;
        mpfr_const_log2(r.lo_, MPFR_RNDD);
        mpfr_const_log2(r.hi_, MPFR_RNDU);
        return r;
    }

    // Natural log of a positive rational.
    static Interval log(const Rational& x) {
        if (x.sign() <= 0) {
            throw DomainError("log of nonpositive value " + x.str());
        }
        Interval a(x);
        Interval r;
        mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
        mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
        return r;
    }

    static Interval exp(const Rational& x) {
        Interval a(x);
        Interval r;
        mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
        mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
        return r;
    }

    friend Interval operator+(const Interval& a, const Interval& b) {
        Interval r;
        mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }

    friend Interval operator-(const Interval& a, const Interval& b) {
        Interval r;
        mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
        return r;
    }

    friend Interval operator*(const Interval& a, const Interval& b) {
        // min/max over the four endpoint products, each rounded outward.
        Interval r;
        mpfr_t t;
        mpfr_init2(t, kPrecision);
        bool first = true;
        for (auto* x : {&a.lo_, &a.hi_}) {
            for (auto* y : {&b.lo_, &b.hi_}) {
                mpfr_mul(t, *x, *y, MPFR_RNDD);
                if (first || mpfr_less_p(t, r.lo_)) {
                    mpfr_set(r.lo_, t, MPFR_RNDD);
                }
                mpfr_mul(t, *x, *y, MPFR_RNDU);
                if (first || mpfr_greater_p(t, r.hi_)) {
                    mpfr_set(r.hi_, t, MPFR_RNDU);
                }
                first = false;
            }
        }
        mpfr_clear(t);
        return r;
    }

    // Division by an interval that is strictly positive.
    friend Interval operator/(const Interval& a, const Interval& b) {
        if (mpfr_sgn(b.lo_) <= 0) {
            throw DomainError("interval division by a range containing zero");
        }
        Interval inv;
        mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
        mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
        return a * inv;
    }

    // Widens the upper endpoint by a nonnegative amount.
    [[nodiscard]] Interval widen_up(const Interval& by) const {
        Interval r(*this);
        mpfr_add(r.hi_, hi_, by.hi_, MPFR_RNDU);
        return r;
    }

    // Certified comparisons; both may be false when the interval straddles q.
    [[nodiscard]] bool certainly_ge(const Rational& q) const { return mpfr_cmp_q(lo_, q.mpq().get_mpq_t()) >= 0; }
    [[nodiscard]] bool certainly_gt(const Rational& q) const { return mpfr_cmp_q(lo_, q.mpq().get_mpq_t()) > 0; }
    [[nodiscard]] bool certainly_lt(const Rational& q) const { return mpfr_cmp_q(hi_, q.mpq().get_mpq_t()) < 0; }
    [[nodiscard]] bool certainly_le(const Rational& q) const { return mpfr_cmp_q(hi_, q.mpq().get_mpq_t()) <= 0; }

    [[nodiscard]] bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }

    // Outward-rounded double endpoints.
    [[nodiscard]] double lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    [[nodiscard]] double upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    [[nodiscard]] double mid() const { return 0.5 * (lower() + upper()); }

  private:
    mpfr_t lo_;
    mpfr_t hi_;

    void init() {
        mpfr_init2(lo_, kPrecision);
        mpfr_init2(hi_, kPrecision);
    }
};

} // namespace abc
