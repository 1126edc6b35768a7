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

#include <optional>
#include <string>
#include <vector>

#include "center.hpp"
#include "errors.hpp"
#include "form.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"

namespace harrison {

/// Candidate composition identity
///   q(x)^d (x1^d + ... + xr^d)(y1^d + ... + ys^d) = sum_k (sum_j p_kj(x) y_j)^d,
/// i.e. z_k = (1/q) sum_j p_kj(x) y_j. Polynomials in x are read
/// positionally over r variables; s is the common row length.
struct ZSpec {
    unsigned r = 0;
    /// number of z_k (rows of `numerators`)
    unsigned n = 0;
    unsigned d = 0;
    Polynomial q;
    std::vector<std::vector<Polynomial>> numerators;

    std::size_t y_count() const { return numerators.empty() ? 0 : numerators.front().size(); }
};

inline void validate(const ZSpec& s) {
    if (s.d < 3) throw ValidationError("ZSpec: d must be at least 3");
    if (s.r < 1) throw ValidationError("ZSpec: r must be at least 1");
    if (s.numerators.size() != s.n) throw ValidationError("ZSpec: expected n rows of numerators");
    if (s.n == 0 || s.y_count() == 0) throw ValidationError("ZSpec: empty numerator table");
    if (s.q.nvars() != s.r) throw ValidationError("ZSpec: q must be a polynomial in r variables");
    if (s.q.is_zero()) throw ValidationError("ZSpec: q must be nonzero");
    for (const auto& row : s.numerators) {
        if (row.size() != s.y_count()) throw ValidationError("ZSpec: numerator rows have different lengths");
        for (const auto& p : row)
            if (p.nvars() != s.r) throw ValidationError("ZSpec: numerators must be polynomials in r variables");
    }
}

struct IdentityCheck {
    bool holds = false;
    /// q^d·(sum x^d)(sum y^d) - sum_k (numerator_k · y)^d over x1..xr, y1..ys
    Polynomial residual;
};

inline std::vector<std::string> joint_variables(std::size_t r, std::size_t s) {
    auto v = numbered_variables(r, "x");
    auto y = numbered_variables(s, "y");
    v.insert(v.end(), y.begin(), y.end());
    return v;
}

inline Polynomial power_sum(const std::vector<std::string>& ring, std::size_t first, std::size_t count, unsigned d) {
    Polynomial p(ring);
    for (std::size_t i = 0; i < count; ++i) {
        Monomial m(ring.size(), 0);
        m[first + i] = d;
        p.add_term(m, Rational(1));
    }
    return p;
}

inline IdentityCheck verify_power_identity(const ZSpec& spec) {
    validate(spec);
    const std::size_t r = spec.r, s = spec.y_count();
    const auto ring = joint_variables(r, s);
    std::vector<std::size_t> xmap(r);
    for (std::size_t i = 0; i < r; ++i) xmap[i] = i;

    Polynomial lhs = pow(embed(spec.q, ring, xmap), spec.d) * power_sum(ring, 0, r, spec.d) * power_sum(ring, r, s, spec.d);
    Polynomial rhs(ring);
    for (const auto& row : spec.numerators) {
        Polynomial z(ring);
        for (std::size_t j = 0; j < s; ++j) z = z + embed(row[j], ring, xmap) * Polynomial::variable(ring, r + j);
        rhs = rhs + pow(z, spec.d);
    }
    IdentityCheck out;
    out.residual = lhs - rhs;
    out.holds = out.residual.is_zero();
    return out;
}

/// z1 = x1 y1, z2 = x1 y2, z3 = x2 y1, z4 = x2 y2, remaining z_k = 0, with
/// r = 2 and two y variables.
inline ZSpec corollary33_witness(unsigned d, unsigned n) {
    if (d < 3) throw ValidationError("witness needs d >= 3");
    if (n < 4) throw ValidationError("witness needs n >= 4 slots for z1..z4");
    const auto xs = numbered_variables(2, "x");
    ZSpec s;
    s.r = 2;
    s.n = n;
    s.d = d;
    s.q = Polynomial::constant(xs, Rational(1));
    s.numerators.assign(n, std::vector<Polynomial>(2, Polynomial::zero(xs)));
    for (std::size_t xi = 0; xi < 2; ++xi)
        for (std::size_t yj = 0; yj < 2; ++yj) s.numerators[2 * xi + yj][yj] = Polynomial::variable(xs, xi);
    return s;
}

/// Linear form l with l^d = f, if one exists over the rationals. The sign is
/// fixed by making the first nonzero coefficient positive when d is even.
inline std::optional<Polynomial> is_dth_power(const Form& f) {
    const unsigned d = f.degree();
    const std::size_t n = f.nvars();
    std::size_t lead = n;
    Rational lead_coeff;
    for (std::size_t i = 0; i < n && lead == n; ++i) {
        Monomial m(n, 0);
        m[i] = d;
        Rational c = f.poly().coefficient(m);
        if (sgn(c) == 0) continue;
        auto root = exact_root(c, d);
        if (!root) return std::nullopt;
        lead = i;
        lead_coeff = *root;
        if (d % 2 == 0) lead_coeff = abs(lead_coeff);
    }
    if (lead == n) return std::nullopt;  // l^d would have a nonzero pure power
    Polynomial l(f.variables());
    Rational denom = Rational(d) * rational_pow(lead_coeff, d - 1);
    for (std::size_t i = 0; i < n; ++i) {
        Monomial unit(n, 0);
        unit[i] = 1;
        if (i == lead) {
            l.add_term(unit, lead_coeff);
            continue;
        }
        // coefficient of x_lead^(d-1) x_i in l^d is d·a_lead^(d-1)·a_i
        Monomial m(n, 0);
        m[lead] = d - 1;
        m[i] = 1;
        l.add_term(unit, f.poly().coefficient(m) / denom);
    }
    if (!(pow(l, d) == f.poly())) return std::nullopt;
    return l;
}

/// One coefficient comparison between l^d, l = sum a_i x_i, and a target form.
struct CoefficientEquation {
    /// monomial in x1..xr whose coefficient is compared
    Monomial x_monomial;
    /// coefficient of that monomial in l^d, a polynomial in a1..ar
    Polynomial lhs;
    /// coefficient in the target form
    Rational rhs;
};

struct RefutationCertificate {
    enum class Kind {
        /// a_i^d = 1 forces every a_i nonzero, yet a cross-term coefficient
        /// that is a nonzero multiple of a product of a_i must vanish
        cross_term_nonzero,
        /// some pure-power equation a_i^d = c has no rational solution
        power_sum_mismatch,
    };
    unsigned r = 0;
    unsigned d = 0;
    Kind kind = Kind::cross_term_nonzero;
    std::vector<CoefficientEquation> equations;
};

inline std::string to_string(RefutationCertificate::Kind k) {
    return k == RefutationCertificate::Kind::cross_term_nonzero ? "cross-term-nonzero" : "power-sum-mismatch";
}

namespace identity_detail {

/// Coefficients of (a1 x1 + ... + ar xr)^d keyed by x-monomial, as
/// polynomials in a1..ar.
inline std::map<Monomial, Polynomial, GrlexLess> generic_power_coefficients(unsigned r, unsigned d) {
    auto ring = numbered_variables(r, "a");
    auto xs = numbered_variables(r, "x");
    ring.insert(ring.end(), xs.begin(), xs.end());
    Polynomial l(ring);
    for (unsigned i = 0; i < r; ++i) l = l + Polynomial::variable(ring, i) * Polynomial::variable(ring, r + i);
    std::vector<bool> xmask(2 * r, false);
    for (unsigned i = 0; i < r; ++i) xmask[r + i] = true;
    std::vector<std::size_t> a_idx(r);
    for (unsigned i = 0; i < r; ++i) a_idx[i] = i;
    std::map<Monomial, Polynomial, GrlexLess> out;
    for (auto& [m, c] : collect_by(pow(l, d), xmask))
        out.emplace(Monomial(m.begin() + r, m.end()), restrict_to(c, a_idx));
    return out;
}

/// True iff p is c·a^k for a single monomial with c != 0; fills exponents.
inline bool single_term(const Polynomial& p, Monomial& exps) {
    if (p.size() != 1) return false;
    exps = p.terms().begin()->first;
    return true;
}

}  // namespace identity_detail

/// Certificate that x1^d + ... + xr^d (r >= 2) is not l^d for any linear
/// form l: the equations a_i^d = 1 make each a_i nonzero, while the
/// x1^(d-1) x2 coefficient d·a1^(d-1)·a2 would have to vanish.
inline RefutationCertificate refute_composition(unsigned r, unsigned d) {
    if (r < 2) throw ValidationError("refute_composition needs r >= 2 (r = 1 is the trivial identity)");
    if (d < 3) throw ValidationError("refute_composition needs d >= 3");
    auto coeffs = identity_detail::generic_power_coefficients(r, d);
    RefutationCertificate cert;
    cert.r = r;
    cert.d = d;
    cert.kind = RefutationCertificate::Kind::cross_term_nonzero;
    for (unsigned i = 0; i < r; ++i) {
        Monomial m(r, 0);
        m[i] = d;
        cert.equations.push_back({m, coeffs.at(m), Rational(1)});
    }
    Monomial cross(r, 0);
    cross[0] = d - 1;
    cross[1] = 1;
    cert.equations.push_back({cross, coeffs.at(cross), Rational(0)});
    return cert;
}

/// Recomputes every equation from the expansion of l^d and the target
/// x1^d + ... + xr^d, then checks the system is inconsistent.
inline bool replay_certificate(const RefutationCertificate& cert) {
    if (cert.r < 2 || cert.d < 3 || cert.equations.empty()) return false;
    auto coeffs = identity_detail::generic_power_coefficients(cert.r, cert.d);
    auto xs = numbered_variables(cert.r, "x");
    for (const auto& eq : cert.equations) {
        if (eq.x_monomial.size() != cert.r || total_degree(eq.x_monomial) != cert.d) return false;
        auto it = coeffs.find(eq.x_monomial);
        if (it == coeffs.end() || !(it->second == eq.lhs)) return false;
        bool pure = std::count(eq.x_monomial.begin(), eq.x_monomial.end(), 0u) == static_cast<long>(cert.r) - 1;
        if (eq.rhs != (pure ? 1 : 0)) return false;
    }
    using Kind = RefutationCertificate::Kind;
    if (cert.kind == Kind::power_sum_mismatch) {
        for (const auto& eq : cert.equations) {
            Monomial e;
            if (identity_detail::single_term(eq.lhs, e) && total_degree(e) == cert.d &&
                !exact_root(eq.rhs / eq.lhs.leading().second, cert.d))
                return true;
        }
        return false;
    }
    // variables forced nonzero by a_i^k = c, c != 0
    std::vector<bool> nonzero(cert.r, false);
    for (const auto& eq : cert.equations) {
        Monomial e;
        if (sgn(eq.rhs) == 0 || !identity_detail::single_term(eq.lhs, e)) continue;
        if (std::count(e.begin(), e.end(), 0u) == static_cast<long>(cert.r) - 1)
            for (unsigned i = 0; i < cert.r; ++i)
                if (e[i]) nonzero[i] = true;
    }
    for (const auto& eq : cert.equations) {
        Monomial e;
        if (sgn(eq.rhs) != 0 || !identity_detail::single_term(eq.lhs, e)) continue;
        bool all_forced = true;
        for (unsigned i = 0; i < cert.r; ++i)
            if (e[i] && !nonzero[i]) all_forced = false;
        if (all_forced) return true;  // nonzero monomial required to vanish
    }
    return false;
}

/// g = y1^d + ... + yn^d + (a1 y1 + ... + an yn)^d.
inline Form thm32_form(unsigned n, unsigned d, const std::vector<Rational>& a) {
    if (n < 2) throw ValidationError("thm32_form needs n >= 2");
    if (d < 3) throw ValidationError("thm32_form needs d >= 3");
    if (a.size() != n) throw ValidationError("thm32_form needs exactly n coefficients");
    for (const auto& c : a)
        if (sgn(c) == 0) throw ValidationError("thm32_form needs every a_k nonzero");
    auto ys = numbered_variables(n, "y");
    Polynomial last(ys);
    for (unsigned k = 0; k < n; ++k) last = last + a[k] * Polynomial::variable(ys, k);
    return Form::from_polynomial(power_sum(ys, 0, n, d) + pow(last, d));
}

inline std::size_t thm32_center_dim(unsigned n, unsigned d, const std::vector<Rational>& a) {
    return center_dim(thm32_form(n, d, a));
}

/// True iff {l^e : l in forms} is linearly independent.
inline bool powers_linear_independent(const std::vector<Polynomial>& forms, unsigned e) {
    std::vector<Polynomial> powers;
    for (const auto& l : forms) {
        auto h = homogeneous_degree(l);
        if (!h.is_homogeneous() || h.degree != 1) throw ValidationError("powers_linear_independent: input is not a linear form");
        powers.push_back(pow(l, e));
    }
    return rank(coefficient_matrix(powers)) == forms.size();
}

/// Substitutes values for the variables at `x_indices` and returns the
/// resulting form in the remaining variables.
inline Form specialize(const Polynomial& p, const std::vector<std::size_t>& x_indices, const std::vector<Rational>& values) {
    if (x_indices.size() != values.size()) throw DimensionMismatch("specialize: one value per x variable");
    std::vector<bool> is_x(p.nvars(), false);
    for (auto i : x_indices) {
        if (i >= p.nvars()) throw DimensionMismatch("specialize: index out of range");
        is_x[i] = true;
    }
    std::vector<std::size_t> keep;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < p.nvars(); ++i)
        if (!is_x[i]) {
            keep.push_back(i);
            names.push_back(p.variables()[i]);
        }
    Polynomial r(names);
    for (const auto& [m, c] : p.terms()) {
        Rational v = c;
        for (std::size_t k = 0; k < x_indices.size() && sgn(v) != 0; ++k)
            if (m[x_indices[k]]) v *= rational_pow(values[k], m[x_indices[k]]);
        Monomial t;
        for (auto i : keep) t.push_back(m[i]);
        r.add_term(t, v);
    }
    if (r.is_zero()) throw DegenerateForm("specialization vanishes identically");
    return Form::from_polynomial(r);
}

}  // namespace harrison
