// Copyright (c) abc-tree contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "abc/errors.hpp"

namespace abc {

// Exact rational scalar, always in lowest terms with a positive denominator.
// Text form is "p/q", or "p" when the denominator is one.
class Rational {
    mpq_class v_;

    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT(google-explicit-constructor)
    Rational(int n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) {
            throw ParameterError("rational with zero denominator");
        }
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    static Rational from_mpq(const mpq_class& q) { return Rational(q); }

    // Accepts "p", "p/q", with an optional leading sign.
    static Rational parse(std::string_view text) {
        if (text.empty()) {
            throw ParseError("empty rational");
        }
        auto check_int = [&](std::string_view s) {
            std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
            if (i >= s.size()) {
                throw ParseError("malformed rational '" + std::string(text) + "'");
            }
            for (; i < s.size(); ++i) {
                if (s[i] < '0' || s[i] > '9') {
                    throw ParseError("malformed rational '" + std::string(text) + "'");
                }
            }
        };
        auto strip_plus = [](std::string_view s) {
            return (!s.empty() && s[0] == '+') ? std::string(s.substr(1)) : std::string(s);
        };
        const auto slash = text.find('/');
        mpq_class q;
        if (slash == std::string_view::npos) {
            check_int(text);
            q = mpq_class(mpz_class(strip_plus(text)));
        } else {
            auto num = text.substr(0, slash);
            auto den = text.substr(slash + 1);
            check_int(num);
            if (den.empty() || den[0] == '-' || den[0] == '+') {
                throw ParseError("malformed rational '" + std::string(text) + "'");
            }
            check_int(den);
            mpz_class d(std::string{den});
            if (d == 0) {
                throw ParseError("zero denominator in '" + std::string(text) + "'");
            }
            q = mpq_class(mpz_class(strip_plus(num)), d);
        }
        return Rational(q);
    }

    [[nodiscard]] const mpq_class& mpq() const { return v_; }
    [[nodiscard]] mpz_class numerator() const { return v_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return v_.get_den(); }

    [[nodiscard]] int sign() const { return sgn(v_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
    [[nodiscard]] double to_double() const { return v_.get_d(); }

    [[nodiscard]] mpz_class floor() const {
        mpz_class r;
        mpz_fdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return r;
    }
    [[nodiscard]] mpz_class ceil() const {
        mpz_class r;
        mpz_cdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return r;
    }

    [[nodiscard]] std::string str() const {
        if (is_integer()) {
            return v_.get_num().get_str();
        }
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) {
            throw ParameterError("division by zero rational");
        }
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }
};

inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

// Narrowing helpers for integer results that must fit in 64 bits.
inline std::int64_t to_int64(const mpz_class& z) {
    if (!z.fits_slong_p()) {
        throw DomainError("integer " + z.get_str() + " exceeds 64-bit range");
    }
    return z.get_si();
}

inline std::uint64_t to_uint64(const mpz_class& z) {
    if (sgn(z) < 0 || !z.fits_ulong_p()) {
        throw DomainError("integer " + z.get_str() + " outside unsigned 64-bit range");
    }
    return z.get_ui();
}

} // namespace abc
