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

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace harrison {

/// Exponent vector; its length equals the ambient variable count.
using Monomial = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

/// Graded lexicographic order: total degree first, then lex on exponents
/// (x1 > x2 > ...). Maps iterate ascending, so the leading term is last.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        auto da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

inline bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// Sparse multivariate polynomial with rational coefficients over a fixed,
/// ordered list of variable names. No zero coefficient is ever stored, so
/// equality is structural.
class Polynomial {
   public:
    using Terms = std::map<Monomial, Rational, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}
    Polynomial(std::vector<std::string> variables, Terms terms) : vars_(std::move(variables)) {
        for (auto& [m, c] : terms) add_term(m, c);
    }

    static Polynomial zero(std::vector<std::string> variables) { return Polynomial(std::move(variables)); }
    static Polynomial constant(std::vector<std::string> variables, const Rational& c) {
        Polynomial p(std::move(variables));
        p.add_term(Monomial(p.nvars(), 0), c);
        return p;
    }
    static Polynomial variable(std::vector<std::string> variables, std::size_t index) {
        if (index >= variables.size()) throw DimensionMismatch("variable index out of range");
        Polynomial p(std::move(variables));
        Monomial m(p.nvars(), 0);
        m[index] = 1;
        p.add_term(m, Rational(1));
        return p;
    }
    static Polynomial term(std::vector<std::string> variables, Monomial m, const Rational& c) {
        if (m.size() != variables.size()) throw DimensionMismatch("monomial length differs from variable count");
        Polynomial p(std::move(variables));
        p.add_term(m, c);
        return p;
    }

    const std::vector<std::string>& variables() const noexcept { return vars_; }
    std::size_t nvars() const noexcept { return vars_.size(); }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }
    Rational constant_term() const { return coefficient(Monomial(nvars(), 0)); }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Leading term under grlex; precondition: nonzero.
    const std::pair<const Monomial, Rational>& leading() const { return *terms_.rbegin(); }

    std::uint64_t degree() const { return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first); }

    /// Accumulates c·x^m, pruning a coefficient that cancels to zero.
    void add_term(const Monomial& m, const Rational& c) {
        if (m.size() != vars_.size()) throw DimensionMismatch("monomial length differs from variable count");
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

   private:
    std::vector<std::string> vars_;
    Terms terms_;
};

inline Polynomial zero_like(const Polynomial& p) { return Polynomial::zero(p.variables()); }
inline Polynomial one_like(const Polynomial& p) { return Polynomial::constant(p.variables(), Rational(1)); }
inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

namespace detail {
inline void require_same_ring(const Polynomial& p, const Polynomial& q) {
    if (p.variables() != q.variables()) throw VariableMismatch();
}
}  // namespace detail

inline Polynomial add(const Polynomial& p, const Polynomial& q) {
    detail::require_same_ring(p, q);
    Polynomial r = p;
    for (const auto& [m, c] : q.terms()) r.add_term(m, c);
    return r;
}

inline Polynomial negate(const Polynomial& p) {
    Polynomial r(p.variables());
    for (const auto& [m, c] : p.terms()) r.add_term(m, -c);
    return r;
}

inline Polynomial sub(const Polynomial& p, const Polynomial& q) {
    detail::require_same_ring(p, q);
    Polynomial r = p;
    for (const auto& [m, c] : q.terms()) r.add_term(m, -c);
    return r;
}

inline Polynomial scale(const Polynomial& p, const Rational& s) {
    Polynomial r(p.variables());
    if (sgn(s) == 0) return r;
    for (const auto& [m, c] : p.terms()) r.add_term(m, c * s);
    return r;
}

inline Polynomial mul(const Polynomial& p, const Polynomial& q) {
    detail::require_same_ring(p, q);
    Polynomial r(p.variables());
    Monomial m(p.nvars());
    for (const auto& [mp, cp] : p.terms())
        for (const auto& [mq, cq] : q.terms()) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = mp[i] + mq[i];
            r.add_term(m, cp * cq);
        }
    return r;
}

inline Polynomial pow(const Polynomial& p, unsigned k) {
    Polynomial result = one_like(p);
    Polynomial base = p;
    while (k) {
        if (k & 1u) result = mul(result, base);
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return result;
}

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return sub(p, q); }
inline Polynomial operator-(const Polynomial& p) { return negate(p); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }
inline Polynomial operator*(const Rational& s, const Polynomial& p) { return scale(p, s); }
inline Polynomial operator*(const Polynomial& p, const Rational& s) { return scale(p, s); }

/// Quotient r with q·r = p; throws NotDivisible otherwise.
inline Polynomial exact_div(const Polynomial& p, const Polynomial& q) {
    detail::require_same_ring(p, q);
    if (q.is_zero()) throw InputError("exact_div: division by the zero polynomial");
    const auto& [lm, lc] = q.leading();
    Polynomial rem = p;
    Polynomial quot(p.variables());
    Monomial m(p.nvars());
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        if (!divides(lm, rm)) throw NotDivisible();
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = rm[i] - lm[i];
        Rational c = rc / lc;
        quot.add_term(m, c);
        for (const auto& [qm, qc] : q.terms()) {
            Monomial t(m.size());
            for (std::size_t i = 0; i < t.size(); ++i) t[i] = qm[i] + m[i];
            rem.add_term(t, -c * qc);
        }
    }
    return quot;
}

/// Formal partial derivative with respect to variable `var`.
inline Polynomial diff(const Polynomial& p, std::size_t var) {
    if (var >= p.nvars()) throw DimensionMismatch("diff: variable index out of range");
    Polynomial r(p.variables());
    for (const auto& [m, c] : p.terms()) {
        if (m[var] == 0) continue;
        Monomial t = m;
        --t[var];
        r.add_term(t, c * m[var]);
    }
    return r;
}

/// p(P·y): variable i is replaced by sum_j P(i,j)·y_j. Names are kept.
inline Polynomial subst_linear(const Polynomial& p, const RationalMatrix& P) {
    const std::size_t n = p.nvars();
    if (P.rows() != n || P.cols() != n) throw DimensionMismatch("subst_linear: matrix side must equal variable count");
    std::vector<Polynomial> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial li(p.variables());
        for (std::size_t j = 0; j < n; ++j) {
            Monomial m(n, 0);
            m[j] = 1;
            li.add_term(m, P(i, j));
        }
        images.push_back(std::move(li));
    }
    // powers[i][k] = images[i]^k, filled lazily
    std::vector<std::vector<Polynomial>> powers(n);
    auto power_of = [&](std::size_t i, std::uint32_t k) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(one_like(p));
        while (cache.size() <= k) cache.push_back(mul(cache.back(), images[i]));
        return cache[k];
    };
    Polynomial r(p.variables());
    for (const auto& [m, c] : p.terms()) {
        Polynomial t = Polynomial::constant(p.variables(), c);
        for (std::size_t i = 0; i < n; ++i)
            if (m[i]) t = mul(t, power_of(i, m[i]));
        r = add(r, t);
    }
    return r;
}

inline Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
    if (point.size() != p.nvars()) throw DimensionMismatch("evaluate: point length differs from variable count");
    Rational acc(0);
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) t *= rational_pow(point[i], m[i]);
        acc += t;
    }
    return acc;
}

/// Result of a homogeneity check. The zero polynomial is reported as its own
/// kind rather than as "every degree".
struct HomogeneousDegree {
    enum class Kind { zero, homogeneous, inhomogeneous };
    Kind kind;
    std::uint64_t degree = 0;

    bool is_homogeneous() const { return kind == Kind::homogeneous; }
    std::optional<std::uint64_t> value() const {
        return kind == Kind::homogeneous ? std::optional<std::uint64_t>(degree) : std::nullopt;
    }
};

inline HomogeneousDegree homogeneous_degree(const Polynomial& p) {
    if (p.is_zero()) return {HomogeneousDegree::Kind::zero, 0};
    std::uint64_t d = total_degree(p.terms().begin()->first);
    // grlex groups by degree, so first and last term suffice
    if (total_degree(p.terms().rbegin()->first) != d) return {HomogeneousDegree::Kind::inhomogeneous, 0};
    return {HomogeneousDegree::Kind::homogeneous, d};
}

/// Degree in a subset of variables; used for forms over a parameter ring.
inline HomogeneousDegree homogeneous_degree_in(const Polynomial& p, const std::vector<bool>& mask) {
    if (p.is_zero()) return {HomogeneousDegree::Kind::zero, 0};
    std::optional<std::uint64_t> d;
    for (const auto& [m, c] : p.terms()) {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (mask[i]) k += m[i];
        if (d && *d != k) return {HomogeneousDegree::Kind::inhomogeneous, 0};
        d = k;
    }
    return {HomogeneousDegree::Kind::homogeneous, *d};
}

/// Re-expresses p over a different variable list. `index_map[i]` is the
/// position of p's variable i in `target`.
inline Polynomial embed(const Polynomial& p, const std::vector<std::string>& target,
                        const std::vector<std::size_t>& index_map) {
    if (index_map.size() != p.nvars()) throw DimensionMismatch("embed: index map length");
    Polynomial r(target);
    for (const auto& [m, c] : p.terms()) {
        Monomial t(target.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (index_map[i] >= target.size()) throw DimensionMismatch("embed: index out of range");
            t[index_map[i]] += m[i];
        }
        r.add_term(t, c);
    }
    return r;
}

/// Positive rational c such that p / c has coprime integer coefficients
/// with positive leading coefficient. Zero for the zero polynomial.
inline Rational content(const Polynomial& p) {
    if (p.is_zero()) return Rational(0);
    Integer g(0), l(1);
    for (const auto& [m, c] : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational r(g, l);
    r.canonicalize();
    if (sgn(p.leading().second) < 0) r = -r;
    return r;
}

inline Polynomial primitive_part(const Polynomial& p) {
    if (p.is_zero()) return p;
    return scale(p, 1 / content(p));
}

/// Splits p by the monomial in the masked variables: returns
/// {masked monomial -> coefficient polynomial in the remaining variables}.
/// The coefficient polynomials keep the full variable list with masked
/// exponents zeroed.
inline std::map<Monomial, Polynomial, GrlexLess> collect_by(const Polynomial& p, const std::vector<bool>& mask) {
    std::map<Monomial, Polynomial, GrlexLess> out;
    for (const auto& [m, c] : p.terms()) {
        Monomial key(m.size(), 0), rest = m;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (mask[i]) {
                key[i] = m[i];
                rest[i] = 0;
            }
        auto it = out.try_emplace(key, Polynomial(p.variables())).first;
        it->second.add_term(rest, c);
    }
    return out;
}

/// Variable list x1..xn (or with another prefix).
inline std::vector<std::string> numbered_variables(std::size_t n, const std::string& prefix = "x") {
    std::vector<std::string> v;
    v.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) v.push_back(prefix + std::to_string(i));
    return v;
}

/// All exponent vectors of total degree d in n variables, ascending grlex.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t d) {
    std::vector<Monomial> out;
    Monomial m(n, 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
        if (n == 0) return;
        if (i + 1 == n) {
            m[i] = left;
            out.push_back(m);
            return;
        }
        for (std::uint32_t k = 0; k <= left; ++k) {
            m[i] = k;
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

/// Canonical text form: terms in descending grlex order, e.g.
/// "x1^3 - 1/2*x1*x2^2 + 4". Re-parses to the same polynomial.
inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        Rational a = abs(c);
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += p.variables()[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
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
