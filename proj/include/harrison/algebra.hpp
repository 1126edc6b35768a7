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
#include <optional>
#include <random>
#include <vector>

#include "errors.hpp"
#include "factor.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "unipoly.hpp"

namespace harrison {

/// Coordinates over the basis of a CommAlgebra.
struct AlgebraElement {
    RationalVector coords;

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

/// Finite-dimensional commutative algebra presented by n x n matrices. Basis
/// element 0 is the unit, which is the identity matrix for Z(f) and an
/// idempotent for corner algebras e·A.
class CommAlgebra {
   public:
    /// Requires the span to contain the identity, be commutative and closed.
    static CommAlgebra from_matrix_span(const std::vector<RationalMatrix>& mats) {
        if (mats.empty()) throw MissingIdentity();
        return from_span_with_unit(mats, RationalMatrix::identity(mats.front().rows()));
    }

    static CommAlgebra from_span_with_unit(const std::vector<RationalMatrix>& mats, const RationalMatrix& unit) {
        CommAlgebra a;
        a.n_ = unit.rows();
        for (const auto& m : mats)
            if (m.rows() != a.n_ || m.cols() != a.n_) throw DimensionMismatch("algebra: matrices of mixed sizes");
        auto span = canonical_span(vectorize_all(mats), a.n_ * a.n_);
        if (!solve_in_span(span, unit.vectorize())) throw MissingIdentity();

        std::vector<RationalVector> chosen{unit.vectorize()};
        for (auto& v : span)
            if (!solve_in_span(chosen, v)) chosen.push_back(std::move(v));
        for (auto& v : chosen) a.basis_.push_back(RationalMatrix::unvectorize(v, a.n_, a.n_));
        a.vectors_ = std::move(chosen);

        // coordinate solver on the pivot columns of the basis
        Echelon e = rref_with_pivots(RationalMatrix::from_rows(a.vectors_));
        a.pivot_cols_ = e.pivots;
        const std::size_t m = a.basis_.size();
        RationalMatrix sub(m, m, Rational(0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) sub(j, i) = a.vectors_[i][a.pivot_cols_[j]];
        a.solver_ = invert(sub);

        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (!(a.basis_[i] * a.basis_[j] == a.basis_[j] * a.basis_[i])) throw NotCommutative();
        a.structure_.assign(m, std::vector<RationalVector>(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j) {
                auto c = a.try_coordinates(a.basis_[i] * a.basis_[j]);
                if (!c) throw NotClosed();
                a.structure_[i][j] = c->coords;
                a.structure_[j][i] = c->coords;
            }
        return a;
    }

    std::size_t dim() const noexcept { return basis_.size(); }
    std::size_t matrix_size() const noexcept { return n_; }
    const std::vector<RationalMatrix>& basis() const noexcept { return basis_; }
    const RationalMatrix& unit_matrix() const { return basis_.front(); }

    /// c_{ijk}: basis_i · basis_j = sum_k c_{ijk} basis_k.
    const RationalVector& structure(std::size_t i, std::size_t j) const { return structure_[i][j]; }

    AlgebraElement one() const {
        AlgebraElement e{RationalVector(dim(), Rational(0))};
        e.coords[0] = 1;
        return e;
    }
    AlgebraElement zero() const { return AlgebraElement{RationalVector(dim(), Rational(0))}; }
    AlgebraElement basis_element(std::size_t i) const {
        AlgebraElement e = zero();
        e.coords[i] = 1;
        return e;
    }

    RationalMatrix to_matrix(const AlgebraElement& x) const {
        RationalMatrix m(n_, n_, Rational(0));
        for (std::size_t k = 0; k < dim(); ++k)
            if (sgn(x.coords[k]) != 0) m = m + mat_scale(basis_[k], x.coords[k]);
        return m;
    }

    std::optional<AlgebraElement> try_coordinates(const RationalMatrix& x) const {
        if (x.rows() != n_ || x.cols() != n_) return std::nullopt;
        RationalVector v = x.vectorize();
        RationalVector rhs;
        for (auto c : pivot_cols_) rhs.push_back(v[c]);
        AlgebraElement e{mat_vec(solver_, rhs)};
        if (!(to_matrix(e) == x)) return std::nullopt;
        return e;
    }

    AlgebraElement coordinates(const RationalMatrix& x) const {
        auto e = try_coordinates(x);
        if (!e) throw NotClosed();
        return *e;
    }

    AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const {
        AlgebraElement r = a;
        for (std::size_t k = 0; k < dim(); ++k) r.coords[k] += b.coords[k];
        return r;
    }
    AlgebraElement scale(const AlgebraElement& a, const Rational& s) const {
        AlgebraElement r = a;
        for (auto& c : r.coords) c *= s;
        return r;
    }
    AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const {
        AlgebraElement r = zero();
        for (std::size_t i = 0; i < dim(); ++i) {
            if (sgn(a.coords[i]) == 0) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (sgn(b.coords[j]) == 0) continue;
                Rational w = a.coords[i] * b.coords[j];
                const auto& c = structure_[i][j];
                for (std::size_t k = 0; k < dim(); ++k)
                    if (sgn(c[k]) != 0) r.coords[k] += w * c[k];
            }
        }
        return r;
    }

    /// Matrix of y -> x·y on coordinate vectors.
    RationalMatrix left_multiplication(const AlgebraElement& x) const {
        RationalMatrix l(dim(), dim(), Rational(0));
        for (std::size_t j = 0; j < dim(); ++j) {
            AlgebraElement col = mul(x, basis_element(j));
            for (std::size_t k = 0; k < dim(); ++k) l(k, j) = col.coords[k];
        }
        return l;
    }

    AlgebraElement evaluate(const UniPoly& p, const AlgebraElement& x) const {
        AlgebraElement acc = zero();
        for (long k = p.degree(); k >= 0; --k)
            acc = add(mul(acc, x), scale(one(), p.coeffs()[static_cast<std::size_t>(k)]));
        return acc;
    }

   private:
    CommAlgebra() = default;

    std::size_t n_ = 0;
    std::vector<RationalMatrix> basis_;
    std::vector<RationalVector> vectors_;
    std::vector<std::size_t> pivot_cols_;
    RationalMatrix solver_;
    std::vector<std::vector<RationalVector>> structure_;
};

inline CommAlgebra from_matrix_span(const std::vector<RationalMatrix>& mats) {
    return CommAlgebra::from_matrix_span(mats);
}

/// Monic polynomial of least degree with m(x) = 0 modulo span(ideal).
inline UniPoly min_poly_modulo(const CommAlgebra& a, const AlgebraElement& x, const std::vector<AlgebraElement>& ideal) {
    std::vector<RationalVector> span;
    for (const auto& j : ideal) span.push_back(j.coords);
    const std::size_t base = span.size();
    AlgebraElement power = a.one();
    for (std::size_t k = 0;; ++k) {
        if (auto c = solve_in_span(span, power.coords)) {
            std::vector<Rational> coeffs(k + 1, Rational(0));
            coeffs[k] = 1;
            for (std::size_t i = 0; i < k; ++i) coeffs[i] = -(*c)[base + i];
            return UniPoly(std::move(coeffs));
        }
        span.push_back(power.coords);
        power = a.mul(power, x);
    }
}

inline UniPoly min_poly(const CommAlgebra& a, const AlgebraElement& x) { return min_poly_modulo(a, x, {}); }

/// Kernel of the trace form G_ij = tr(L_i·L_j); the Jacobson radical in
/// characteristic 0.
inline std::vector<AlgebraElement> radical(const CommAlgebra& a) {
    const std::size_t m = a.dim();
    std::vector<RationalMatrix> l;
    for (std::size_t i = 0; i < m; ++i) l.push_back(a.left_multiplication(a.basis_element(i)));
    RationalMatrix g(m, m, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            RationalMatrix p = l[i] * l[j];
            Rational tr(0);
            for (std::size_t k = 0; k < m; ++k) tr += p(k, k);
            g(i, j) = tr;
            g(j, i) = tr;
        }
    std::vector<AlgebraElement> out;
    for (auto& v : kernel_basis(g)) out.push_back(AlgebraElement{std::move(v)});
    return out;
}

/// Complete set of primitive orthogonal idempotents, as matrices, sorted by
/// (corner dimension, entries in row-major lexicographic order).
struct IdempotentSet {
    std::vector<RationalMatrix> idempotents;
    std::vector<std::size_t> corner_dims;

    std::size_t size() const noexcept { return idempotents.size(); }
};

namespace algebra_detail {

inline bool matrix_less(const RationalMatrix& a, const RationalMatrix& b) {
    const auto& x = a.data();
    const auto& y = b.data();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        [](const Rational& p, const Rational& q) { return cmp(p, q) < 0; });
}

/// Corner algebra e·A with unit e.
inline CommAlgebra corner(const CommAlgebra& a, const RationalMatrix& e) {
    std::vector<RationalMatrix> mats;
    for (const auto& b : a.basis()) mats.push_back(e * b);
    return CommAlgebra::from_span_with_unit(mats, e);
}

inline unsigned ceil_log2(std::size_t m) {
    unsigned k = 0;
    while ((std::size_t{1} << k) < m) ++k;
    return k;
}

/// Newton-style lift e <- 3e^2 - 2e^3 of an idempotent modulo the radical.
inline AlgebraElement lift_idempotent(const CommAlgebra& a, AlgebraElement e) {
    const unsigned cap = ceil_log2(a.dim()) + 2;
    for (unsigned it = 0;; ++it) {
        AlgebraElement e2 = a.mul(e, e);
        if (e2 == e) return e;
        if (it == cap) throw ComputationError("idempotent lifting did not converge");
        AlgebraElement e3 = a.mul(e2, e);
        e = a.add(a.scale(e2, Rational(3)), a.scale(e3, Rational(-2)));
    }
}

/// Candidate elements: random ones first, then the deterministic sweep over
/// basis elements and pairwise sums.
inline std::vector<AlgebraElement> candidates(const CommAlgebra& a, std::mt19937_64& rng) {
    constexpr int random_tries = 9;  // first draw plus 8 resamples
    std::uniform_int_distribution<int> coord(-9, 9);
    std::vector<AlgebraElement> out;
    for (int t = 0; t < random_tries; ++t) {
        AlgebraElement x = a.zero();
        for (auto& c : x.coords) c = coord(rng);
        out.push_back(std::move(x));
    }
    for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a.basis_element(i));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j) out.push_back(a.add(a.basis_element(i), a.basis_element(j)));
    return out;
}

inline void split_into(const CommAlgebra& a, std::mt19937_64& rng, std::vector<RationalMatrix>& out) {
    const auto rad = radical(a);
    const std::size_t quotient_dim = a.dim() - rad.size();
    if (quotient_dim == 1) {
        out.push_back(a.unit_matrix());
        return;
    }
    for (const auto& x : candidates(a, rng)) {
        UniPoly m = min_poly_modulo(a, x, rad);
        Factorization fac = factor_rational_poly(m);
        if (fac.factors.size() >= 2) {
            // CRT idempotent: 1 modulo the first factor, 0 modulo the rest
            UniPoly first = upow(fac.factors[0].first, fac.factors[0].second);
            UniPoly rest = m / first;
            Bezout bz = extended_gcd(first, rest);
            UniPoly e_poly = (bz.t * rest) % m;
            AlgebraElement e = lift_idempotent(a, a.evaluate(e_poly, x));
            RationalMatrix em = a.to_matrix(e);
            split_into(corner(a, em), rng, out);
            split_into(corner(a, a.unit_matrix() - em), rng, out);
            return;
        }
        if (m.degree() == static_cast<long>(quotient_dim)) {
            // x generates A/J and its minimal polynomial is irreducible: A/J is a field
            out.push_back(a.unit_matrix());
            return;
        }
    }
    throw ComputationError("idempotent splitting: candidate elements exhausted");
}

}  // namespace algebra_detail

inline IdempotentSet split_idempotents(const CommAlgebra& a, std::mt19937_64& rng) {
    std::vector<RationalMatrix> found;
    algebra_detail::split_into(a, rng, found);
    std::vector<std::pair<std::size_t, RationalMatrix>> keyed;
    for (auto& e : found) keyed.emplace_back(algebra_detail::corner(a, e).dim(), std::move(e));
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return algebra_detail::matrix_less(x.second, y.second);
    });
    IdempotentSet s;
    for (auto& [d, e] : keyed) {
        s.corner_dims.push_back(d);
        s.idempotents.push_back(std::move(e));
    }
    return s;
}

inline IdempotentSet split_idempotents(const CommAlgebra& a, std::uint64_t seed = 0) {
    std::mt19937_64 rng(seed);
    return split_idempotents(a, rng);
}

inline bool is_local(const CommAlgebra& a, std::uint64_t seed = 0) {
    IdempotentSet s = split_idempotents(a, seed);
    return s.size() == 1 && s.idempotents.front() == a.unit_matrix();
}

/// Exact check of e^2 = e, e_i e_j = 0 (i != j) and sum e_i = unit.
inline bool satisfies_idempotent_axioms(const IdempotentSet& s, const RationalMatrix& unit) {
    if (s.idempotents.empty()) return false;
    RationalMatrix sum(unit.rows(), unit.cols(), Rational(0));
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& e = s.idempotents[i];
        if (!(e * e == e) || e.is_zero()) return false;
        for (std::size_t j = 0; j < s.size(); ++j)
            if (i != j && !(e * s.idempotents[j]).is_zero()) return false;
        sum = sum + e;
    }
    return sum == unit;
}

}  // namespace harrison
