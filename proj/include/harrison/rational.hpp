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

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace harrison {

using Integer = mpz_class;
/// Always kept canonical: gcd(num, den) = 1, den > 0, zero is 0/1.
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p" or "p/q" (optional leading sign, decimal digits only).
inline Rational parse_rational(std::string_view text) {
    auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!digits(num) || (slash != std::string_view::npos && !digits(den)))
        throw ValidationError("not a rational number: '" + std::string(text) + "'");
    Integer n{std::string(num)}, d{1};
    if (slash != std::string_view::npos) d = Integer{std::string(den)};
    if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    if (!text.empty() && text.front() == '-') n = -n;
    Rational q(n, d);
    q.canonicalize();
    return q;
}

/// Exact integer k-th root, if one exists. Negative inputs only for odd k.
inline std::optional<Integer> exact_root(const Integer& z, unsigned long k) {
    if (k == 0) return std::nullopt;
    if (z < 0 && k % 2 == 0) return std::nullopt;
    Integer a = abs(z), r;
    if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), k) == 0) return std::nullopt;
    if (z < 0) r = -r;
    return r;
}

/// Exact rational k-th root (numerator and denominator both k-th powers).
inline std::optional<Rational> exact_root(const Rational& q, unsigned long k) {
    auto n = exact_root(Integer(q.get_num()), k);
    auto d = exact_root(Integer(q.get_den()), k);
    if (!n || !d) return std::nullopt;
    Rational r(*n, *d);
    r.canonicalize();
    return r;
}

inline Rational rational_pow(const Rational& base, unsigned long e) {
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), e);
    return Rational(n, d);
}

}  // namespace harrison
