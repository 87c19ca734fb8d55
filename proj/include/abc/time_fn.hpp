// Copyright (c) abc-tree contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abc/rational.hpp"

namespace abc {

// Node time as a function of the number z of cuts on the node's root path.
// Must satisfy w(0) = 1 and be nondecreasing; monotonicity is validated
// over whatever range is evaluated through `values`.
class TimeFn {
  public:
    enum class Kind : std::uint8_t { ConstantOne, Affine, Polynomial, Table };

    static TimeFn one() { return TimeFn(Kind::ConstantOne, {}); }

    // w(z) = a z + b; b must be 1.
    static TimeFn affine(Rational a, Rational b) { return TimeFn(Kind::Affine, {std::move(b), std::move(a)}); }

    // w(z) = sum_i coeffs[i] z^i; coeffs[0] must be 1.
    static TimeFn polynomial(std::vector<Rational> coeffs) { return TimeFn(Kind::Polynomial, std::move(coeffs)); }

    // w(z) = values[z] for z < values.size(); undefined beyond.
    static TimeFn table(std::vector<Rational> values) { return TimeFn(Kind::Table, std::move(values)); }

    // Grammar: one | affine:a,b | poly:c0,c1,... | table:v0,v1,...
    static TimeFn parse(std::string_view text);

    [[nodiscard]] Kind kind() const { return kind_; }

    // Largest z at which w is defined, if bounded.
    [[nodiscard]] std::optional<std::uint64_t> max_z() const {
        if (kind_ == Kind::Table) {
            return coeffs_.size() - 1;
        }
        return std::nullopt;
    }

    [[nodiscard]] Rational operator()(std::uint64_t z) const {
        switch (kind_) {
        case Kind::ConstantOne: return Rational(1);
        case Kind::Table:
            if (z >= coeffs_.size()) {
                throw DomainError("time-function table has no entry for z=" + std::to_string(z));
            }
            return coeffs_[z];
        case Kind::Affine:
        case Kind::Polynomial: {
            // Horner
            Rational acc(0);
            const Rational zq(static_cast<long>(z));
            for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
                acc = acc * zq + *it;
            }
            return acc;
        }
        }
        return Rational(1);
    }

    // w(0..n) with monotonicity checked across the range.
    [[nodiscard]] std::vector<Rational> values(std::uint64_t n) const {
        std::vector<Rational> out;
        out.reserve(n + 1);
        for (std::uint64_t z = 0; z <= n; ++z) {
            out.push_back((*this)(z));
            if (z > 0 && out[z] < out[z - 1]) {
                throw DomainError("time-function decreases between z=" + std::to_string(z - 1) +
                                  " and z=" + std::to_string(z));
            }
        }
        return out;
    }

    [[nodiscard]] std::string str() const {
        auto join = [](const std::vector<Rational>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) {
                s += (i ? "," : "") + v[i].str();
            }
            return s;
        };
        switch (kind_) {
        case Kind::ConstantOne: return "one";
        case Kind::Affine: return "affine:" + coeffs_[1].str() + "," + coeffs_[0].str();
        case Kind::Polynomial: return "poly:" + join(coeffs_);
        case Kind::Table: return "table:" + join(coeffs_);
        }
        return "one";
    }

  private:
    Kind kind_;
    std::vector<Rational> coeffs_; // polynomial coefficients (ascending) or table values

    TimeFn(Kind kind, std::vector<Rational> coeffs) : kind_(kind), coeffs_(std::move(coeffs)) {
        if (kind_ == Kind::ConstantOne) {
            return;
        }
        if (coeffs_.empty()) {
            throw ParameterError("time-function needs at least one coefficient");
        }
        if (coeffs_[0] != Rational(1)) {
            throw ParameterError("time-function must satisfy w(0) = 1 (got " + coeffs_[0].str() + ")");
        }
        if (kind_ == Kind::Table) {
            (void)values(coeffs_.size() - 1);
        }
    }
};

inline TimeFn TimeFn::parse(std::string_view text) {
    if (text == "one") {
        return one();
    }
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw ParseError("malformed time-function '" + std::string(text) + "'");
    }
    const auto head = text.substr(0, colon);
    std::vector<Rational> args;
    auto rest = text.substr(colon + 1);
    while (true) {
        const auto comma = rest.find(',');
        args.push_back(Rational::parse(rest.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        rest = rest.substr(comma + 1);
    }
    if (head == "affine") {
        if (args.size() != 2) {
            throw ParseError("affine time-function takes exactly two values a,b");
        }
        return affine(args[0], args[1]);
    }
    if (head == "poly") {
        return polynomial(std::move(args));
    }
    if (head == "table") {
        return table(std::move(args));
    }
    throw ParseError("unknown time-function kind '" + std::string(head) + "'");
}

} // namespace abc
