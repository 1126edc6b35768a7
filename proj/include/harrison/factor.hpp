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

// Factorization of univariate polynomials over the rationals:
// squarefree decomposition, factorization modulo a small prime
// (distinct-degree + Cantor-Zassenhaus), linear Hensel lifting past a
// Mignotte-style bound, then subset recombination.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace harrison {

struct Factorization {
    /// Leading coefficient of the input; every factor is monic.
    Rational unit;
    std::vector<std::pair<UniPoly, unsigned>> factors;

    UniPoly expand() const {
        UniPoly r = UniPoly::constant(unit);
        for (const auto& [f, k] : factors) r = r * upow(f, k);
        return r;
    }
};

namespace factor_detail {

using ZPoly = std::vector<Integer>;     // low -> high, trimmed
using ModPoly = std::vector<std::uint64_t>;

inline void trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Primitive integer polynomial with positive leading coefficient, same roots.
inline ZPoly primitive_integer(const UniPoly& u) {
    Integer l(1), g(0);
    for (const auto& c : u.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    ZPoly z;
    for (const auto& c : u.coeffs()) {
        Rational t = c * l;
        z.push_back(t.get_num());
    }
    for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (z.back() < 0) g = -g;
    for (auto& c : z) c /= g;
    return z;
}

inline UniPoly to_unipoly(const ZPoly& z) {
    std::vector<Rational> c;
    for (const auto& x : z) c.emplace_back(x);
    return UniPoly(std::move(c));
}

// --- arithmetic in F_p[t], p < 2^31 -------------------------------------

inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr) {
        std::int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (r != 1) throw ComputationError("mod_inverse: not invertible");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

inline std::uint64_t mod_of(const Integer& z, std::uint64_t p) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

inline ModPoly reduce(const ZPoly& z, std::uint64_t p) {
    ModPoly m;
    for (const auto& c : z) m.push_back(mod_of(c, p));
    trim(m);
    return m;
}

inline ModPoly mp_sub(ModPoly a, const ModPoly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

inline ModPoly mp_mul(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    trim(c);
    return c;
}

inline std::pair<ModPoly, ModPoly> mp_divmod(ModPoly a, const ModPoly& b, std::uint64_t p) {
    if (b.empty()) throw ComputationError("modular division by zero");
    if (a.size() < b.size()) return {{}, a};
    ModPoly q(a.size() - b.size() + 1, 0);
    std::uint64_t inv = mod_inverse(b.back(), p);
    for (std::size_t k = q.size(); k-- > 0;) {
        std::uint64_t f = a[k + b.size() - 1] * inv % p;
        q[k] = f;
        if (!f) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = (a[k + j] + p - f * b[j] % p) % p;
    }
    trim(a);
    trim(q);
    return {q, a};
}

inline ModPoly mp_rem(const ModPoly& a, const ModPoly& b, std::uint64_t p) { return mp_divmod(a, b, p).second; }

inline ModPoly mp_monic(ModPoly a, std::uint64_t p) {
    if (a.empty()) return a;
    std::uint64_t inv = mod_inverse(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

inline ModPoly mp_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
    while (!b.empty()) {
        ModPoly r = mp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return mp_monic(a, p);
}

/// s, t with s·a + t·b = 1 for coprime a, b.
inline std::pair<ModPoly, ModPoly> mp_bezout(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
    ModPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
        auto [q, r] = mp_divmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        ModPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p), t2 = mp_sub(t0, mp_mul(q, t1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) throw ComputationError("mp_bezout: inputs not coprime");
    std::uint64_t inv = mod_inverse(r0[0], p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    return {s0, t0};
}

inline ModPoly mp_derivative(const ModPoly& a, std::uint64_t p) {
    ModPoly d;
    for (std::size_t k = 1; k < a.size(); ++k) d.push_back(a[k] * (k % p) % p);
    trim(d);
    return d;
}

/// base^e mod m in F_p[t].
inline ModPoly mp_powmod(ModPoly base, const Integer& e, const ModPoly& m, std::uint64_t p) {
    ModPoly r{1};
    base = mp_rem(base, m, p);
    for (std::size_t bit = mpz_sizeinbase(e.get_mpz_t(), 2); bit-- > 0;) {
        r = mp_rem(mp_mul(r, r, p), m, p);
        if (mpz_tstbit(e.get_mpz_t(), bit)) r = mp_rem(mp_mul(r, base, p), m, p);
    }
    return r;
}

/// Cantor-Zassenhaus equal-degree splitting of a monic product of
/// irreducibles of degree d (p odd).
inline void equal_degree_split(const ModPoly& g, std::size_t d, std::uint64_t p, std::mt19937_64& rng,
                               std::vector<ModPoly>& out) {
    if (g.size() - 1 == d) {
        out.push_back(g);
        return;
    }
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, d);
    Integer e = (q - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> coin(0, p - 1);
    for (;;) {
        ModPoly a(g.size() - 1);
        for (auto& c : a) c = coin(rng);
        trim(a);
        if (a.size() < 2) continue;
        ModPoly b = mp_powmod(a, e, g, p);
        b = mp_sub(b, ModPoly{1}, p);
        ModPoly h = mp_gcd(b, g, p);
        if (h.size() > 1 && h.size() < g.size()) {
            equal_degree_split(h, d, p, rng, out);
            equal_degree_split(mp_monic(mp_divmod(g, h, p).first, p), d, p, rng, out);
            return;
        }
    }
}

/// Monic irreducible factors of a monic squarefree polynomial over F_p.
inline std::vector<ModPoly> factor_mod_p(ModPoly f, std::uint64_t p) {
    std::vector<ModPoly> out;
    std::mt19937_64 rng(p);
    ModPoly x{0, 1};
    ModPoly h = x;
    for (std::size_t d = 1; 2 * d <= f.size() - 1; ++d) {
        h = mp_powmod(h, Integer(static_cast<unsigned long>(p)), f, p);
        ModPoly g = mp_gcd(mp_sub(h, x, p), f, p);
        if (g.size() > 1) {
            equal_degree_split(g, d, p, rng, out);
            f = mp_monic(mp_divmod(f, g, p).first, p);
            h = mp_rem(h, f, p);
        }
    }
    if (f.size() > 1) out.push_back(f);
    return out;
}

// --- arithmetic in (Z / M)[t] -------------------------------------------

inline void mod_in_place(ZPoly& a, const Integer& m) {
    for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    trim(a);
}

inline ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

inline ZPoly z_sub(ZPoly a, const ZPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

inline ZPoly lift(const ModPoly& a) {
    ZPoly z;
    for (auto c : a) z.emplace_back(static_cast<unsigned long>(c));
    return z;
}

/// Given monic F ≡ g·h (mod p) with g, h monic and coprime mod p, returns
/// monic G, H with F ≡ G·H (mod p^k).
inline std::pair<ZPoly, ZPoly> hensel_two(const ZPoly& F, const ModPoly& g, const ModPoly& h, std::uint64_t p,
                                          unsigned k) {
    auto [s, t] = mp_bezout(g, h, p);
    ZPoly G = lift(g), H = lift(h);
    Integer pk(static_cast<unsigned long>(p));
    for (unsigned step = 1; step < k; ++step) {
        Integer next = pk * p;
        ZPoly e = z_sub(F, z_mul(G, H));
        mod_in_place(e, next);
        ModPoly em;
        for (auto& c : e) {
            if (!mpz_divisible_p(c.get_mpz_t(), pk.get_mpz_t())) throw ComputationError("Hensel lifting lost exactness");
            Integer q = c / pk;
            em.push_back(mod_of(q, p));
        }
        trim(em);
        ModPoly dg = mp_rem(mp_mul(t, em, p), g, p);
        ModPoly dh = mp_rem(mp_mul(s, em, p), h, p);
        ZPoly zdg = lift(dg), zdh = lift(dh);
        if (G.size() < zdg.size()) G.resize(zdg.size(), Integer(0));
        for (std::size_t i = 0; i < zdg.size(); ++i) G[i] += pk * zdg[i];
        if (H.size() < zdh.size()) H.resize(zdh.size(), Integer(0));
        for (std::size_t i = 0; i < zdh.size(); ++i) H[i] += pk * zdh[i];
        pk = next;
    }
    return {G, H};
}

inline ZPoly symmetric(ZPoly a, const Integer& m) {
    Integer half = m / 2;
    for (auto& c : a) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    trim(a);
    return a;
}

/// Exact division over Z; nullopt when it does not divide.
inline std::optional<ZPoly> z_exact_div(const ZPoly& a, const ZPoly& b) {
    auto [q, r] = divmod(to_unipoly(a), to_unipoly(b));
    if (!r.is_zero()) return std::nullopt;
    ZPoly z;
    for (const auto& c : q.coeffs()) {
        if (c.get_den() != 1) return std::nullopt;
        z.push_back(c.get_num());
    }
    return z;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Irreducible factors (primitive, positive leading coefficient) of a
/// primitive squarefree integer polynomial of positive degree.
inline std::vector<ZPoly> factor_squarefree_integer(const ZPoly& f) {
    const std::size_t n = f.size() - 1;
    if (n == 1) return {f};

    // choose a prime: lc nonzero mod p and f squarefree mod p; among the
    // first few admissible primes keep the one with fewest modular factors
    std::uint64_t best_p = 0;
    std::vector<ModPoly> best;
    int admissible = 0;
    for (std::uint64_t p = 3; admissible < 5; p += 2) {
        if (!is_prime(p) || mod_of(f.back(), p) == 0) continue;
        ModPoly fm = mp_monic(reduce(f, p), p);
        if (mp_gcd(fm, mp_derivative(fm, p), p).size() != 1) continue;
        ++admissible;
        auto facs = factor_mod_p(fm, p);
        if (best_p == 0 || facs.size() < best.size()) {
            best_p = p;
            best = std::move(facs);
        }
        if (best.size() == 1) break;
    }
    if (best.size() == 1) return {f};
    const std::uint64_t p = best_p;

    // coefficient bound: any factor g of f has |g_j| <= 2^n·||f||_2
    Integer sumsq(0);
    for (const auto& c : f) sumsq += c * c;
    Integer norm;
    mpz_sqrt(norm.get_mpz_t(), sumsq.get_mpz_t());
    norm += 1;
    Integer bound = norm * abs(f.back()) * 2;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
    unsigned k = 1;
    Integer M(static_cast<unsigned long>(p));
    while (M <= bound) {
        M *= p;
        ++k;
    }

    // lift the monic modular factorization of f / lc(f) to mod M
    ZPoly F = f;
    {
        Integer inv;
        mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), M.get_mpz_t());
        for (auto& c : F) c *= inv;
        mod_in_place(F, M);
    }
    std::vector<ZPoly> lifted;
    for (std::size_t i = 0; i + 1 < best.size(); ++i) {
        ModPoly rest{1};
        for (std::size_t j = i + 1; j < best.size(); ++j) rest = mp_mul(rest, best[j], p);
        auto [G, H] = hensel_two(F, best[i], rest, p, k);
        mod_in_place(G, M);
        mod_in_place(H, M);
        lifted.push_back(std::move(G));
        F = std::move(H);
    }
    lifted.push_back(F);

    // recombination over subsets of increasing size
    std::vector<ZPoly> out;
    std::vector<std::size_t> alive(lifted.size());
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
    ZPoly rem = f;
    std::size_t s = 1;
    while (2 * s <= alive.size()) {
        bool found = false;
        std::vector<std::size_t> pick(s);
        for (std::size_t i = 0; i < s; ++i) pick[i] = i;
        for (;;) {
            ZPoly cand{rem.back()};
            for (auto i : pick) {
                cand = z_mul(cand, lifted[alive[i]]);
                mod_in_place(cand, M);
            }
            cand = symmetric(cand, M);
            Integer g(0);
            for (const auto& c : cand) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (cand.back() < 0) g = -g;
            for (auto& c : cand) c /= g;
            if (auto q = z_exact_div(rem, cand)) {
                out.push_back(cand);
                rem = *q;
                if (rem.back() < 0)
                    for (auto& c : rem) c = -c;
                std::vector<std::size_t> keep;
                for (std::size_t i = 0; i < alive.size(); ++i)
                    if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(alive[i]);
                alive = std::move(keep);
                found = true;
                break;
            }
            // next combination
            std::size_t i = s;
            while (i-- > 0 && pick[i] == alive.size() - s + i) {
            }
            if (i == static_cast<std::size_t>(-1)) break;
            ++pick[i];
            for (std::size_t j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (rem.size() > 1) out.push_back(rem);
    return out;
}

inline bool unipoly_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (long k = a.degree(); k >= 0; --k) {
        int c = cmp(a.coeff(static_cast<std::size_t>(k)), b.coeff(static_cast<std::size_t>(k)));
        if (c) return c < 0;
    }
    return false;
}

}  // namespace factor_detail

/// Squarefree decomposition (Yun) of a nonzero polynomial: monic
/// pairwise-coprime squarefree parts with their multiplicities.
inline std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& u) {
    if (u.is_zero()) throw InputError("squarefree decomposition of the zero polynomial");
    std::vector<std::pair<UniPoly, unsigned>> out;
    UniPoly a = u.monic();
    if (a.degree() == 0) return out;
    UniPoly b = derivative(a);
    UniPoly c = gcd(a, b);
    UniPoly w = a / c, y = b / c;
    UniPoly z = y - derivative(w);
    for (unsigned i = 1; w.degree() > 0; ++i) {
        UniPoly g = gcd(w, z);
        if (g.degree() > 0) out.emplace_back(g, i);
        w = w / g;
        y = z / g;
        z = y - derivative(w);
    }
    return out;
}

/// Complete factorization over the rationals: unit times monic irreducible
/// factors with multiplicities, sorted by (degree, coefficients).
inline Factorization factor_rational_poly(const UniPoly& u) {
    if (u.is_zero()) throw InputError("cannot factor the zero polynomial");
    Factorization out;
    out.unit = u.leading();
    for (const auto& [part, mult] : squarefree_decomposition(u)) {
        for (const auto& z : factor_detail::factor_squarefree_integer(factor_detail::primitive_integer(part)))
            out.factors.emplace_back(factor_detail::to_unipoly(z).monic(), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first == b.first) return a.second < b.second;
        return factor_detail::unipoly_less(a.first, b.first);
    });
    return out;
}

}  // namespace harrison
