/*
   Copyright 2026 The harrison Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace harrison {

/// Dense univariate polynomial over the rationals, coefficients stored from
/// the constant term upward with no trailing zeros.
class UniPoly {
   public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static UniPoly constant(const Rational& a) { return UniPoly({a}); }
    /// t^k
    static UniPoly power(std::size_t k) {
        std::vector<Rational> c(k + 1, Rational(0));
        c[k] = 1;
        return UniPoly(std::move(c));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const Rational& leading() const { return c_.back(); }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    UniPoly monic() const {
        if (is_zero()) return *this;
        Rational inv = 1 / leading();
        std::vector<Rational> c = c_;
        for (auto& x : c) x *= inv;
        return UniPoly(std::move(c));
    }

    Rational operator()(const Rational& t) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a) {
        std::vector<Rational> c = a.c_;
        for (auto& x : c) x = -x;
        return UniPoly(std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(const Rational& s, const UniPoly& a) { return UniPoly::constant(s) * a; }

   private:
    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Quotient and remainder; throws on division by zero.
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw InputError("UniPoly division by zero");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Rational> r = a.coeffs();
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
    const auto& bc = b.coeffs();
    Rational inv = 1 / b.leading();
    for (long k = a.degree() - b.degree(); k >= 0; --k) {
        Rational f = r[static_cast<std::size_t>(k) + bc.size() - 1] * inv;
        q[static_cast<std::size_t>(k)] = f;
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) r[static_cast<std::size_t>(k) + j] -= f * bc[j];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

inline UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }
inline UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }

/// Monic gcd (zero if both inputs are zero).
inline UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Bezout: returns (g, s, t) with s·a + t·b = g = gcd(a, b), g monic.
struct Bezout {
    UniPoly g, s, t;
};
inline Bezout extended_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b, s0 = UniPoly::constant(1), s1, t0, t1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational inv = 1 / r0.leading();
    return {inv * r0, inv * s0, inv * t0};
}

inline UniPoly derivative(const UniPoly& a) {
    if (a.degree() <= 0) return {};
    std::vector<Rational> c;
    for (std::size_t k = 1; k < a.coeffs().size(); ++k) c.push_back(a.coeffs()[k] * static_cast<unsigned long>(k));
    return UniPoly(std::move(c));
}

inline UniPoly upow(const UniPoly& a, unsigned k) {
    UniPoly r = UniPoly::constant(1);
    for (unsigned i = 0; i < k; ++i) r = r * a;
    return r;
}

inline std::string to_string(const UniPoly& p, const std::string& var = "t") {
    if (p.is_zero()) return "0";
    std::string out;
    for (long k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (sgn(c) == 0) continue;
        Rational a = abs(c);
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (mono.empty())
            out += a.get_str();
        else if (a == 1)
            out += mono;
        else
            out += a.get_str() + "*" + mono;
    }
    return out;
}

}  // namespace harrison
