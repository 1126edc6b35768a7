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

#include <cstddef>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace harrison {

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
    RationalMatrix matrix;
    std::vector<std::size_t> pivots;

    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination; the pivot is the first nonzero entry in the
/// column at or below the current row.
inline Echelon rref_with_pivots(RationalMatrix m) {
    Echelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        if (m(r, c) != 1) {
            Rational inv = 1 / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.matrix = std::move(m);
    return out;
}

inline RationalMatrix rref(const RationalMatrix& m) { return rref_with_pivots(m).matrix; }

inline std::size_t rank(const RationalMatrix& m) { return rref_with_pivots(m).rank(); }

/// Scales v so that its first nonzero coordinate is 1.
inline void normalize_leading_one(RationalVector& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) {
            Rational inv = 1 / x;
            for (auto& y : v) y *= inv;
            return;
        }
}

/// Right null space, one vector per free column of the RREF, each scaled so
/// its first nonzero coordinate is 1.
inline std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
    Echelon e = rref_with_pivots(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.matrix(r, f);
        normalize_leading_one(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Canonical basis of the row span of `vectors`: nonzero rows of the RREF.
inline std::vector<RationalVector> canonical_span(const std::vector<RationalVector>& vectors, std::size_t length) {
    if (vectors.empty()) return {};
    RationalMatrix m = RationalMatrix::from_rows(vectors);
    if (m.cols() != length) throw DimensionMismatch("canonical_span: vector length");
    Echelon e = rref_with_pivots(m);
    std::vector<RationalVector> out;
    for (std::size_t r = 0; r < e.rank(); ++r) out.push_back(e.matrix.row(r));
    return out;
}

inline std::vector<RationalVector> vectorize_all(const std::vector<RationalMatrix>& mats) {
    std::vector<RationalVector> out;
    out.reserve(mats.size());
    for (const auto& m : mats) out.push_back(m.vectorize());
    return out;
}

inline RationalMatrix invert(const RationalMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("invert: matrix is not square");
    const std::size_t n = m.rows();
    RationalMatrix aug(n, 2 * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    Echelon e = rref_with_pivots(aug);
    if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw SingularMatrix();
    RationalMatrix inv(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.matrix(i, n + j);
    return inv;
}

inline bool is_invertible(const RationalMatrix& m) { return m.is_square() && rank(m) == m.rows(); }

/// Coordinates c with sum_i c_i·rows[i] = target, if target lies in the span.
inline std::optional<RationalVector> solve_in_span(const std::vector<RationalVector>& rows, const RationalVector& target) {
    const std::size_t k = rows.size(), len = target.size();
    // columns = rows, augmented with target
    RationalMatrix a(len, k + 1, Rational(0));
    for (std::size_t j = 0; j < k; ++j) {
        if (rows[j].size() != len) throw DimensionMismatch("solve_in_span: vector length");
        for (std::size_t i = 0; i < len; ++i) a(i, j) = rows[j][i];
    }
    for (std::size_t i = 0; i < len; ++i) a(i, k) = target[i];
    Echelon e = rref_with_pivots(a);
    if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
    RationalVector c(k, Rational(0));
    for (std::size_t r = 0; r < e.rank(); ++r) c[e.pivots[r]] = e.matrix(r, k);
    return c;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination over a polynomial ring
// ---------------------------------------------------------------------------

using PolyMatrix = Matrix<Polynomial>;
using PolyVector = std::vector<Polynomial>;

struct FractionFreeEchelon {
    PolyMatrix matrix;
    std::vector<std::size_t> pivots;
    /// Common value of every pivot entry after reduction (1 if rank is 0).
    Polynomial pivot_value;
};

/// Bareiss-style fraction-free Gauss-Jordan. After the sweep each pivot row
/// has the same entry `pivot_value` in its pivot column and zero in every
/// other pivot column; all divisions are exact.
inline FractionFreeEchelon bareiss_reduce(PolyMatrix m, const std::vector<std::string>& ring) {
    FractionFreeEchelon out;
    Polynomial prev = Polynomial::constant(ring, Rational(1));
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        const Polynomial piv = m(r, c);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            const Polynomial lead = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (j == c) continue;
                Polynomial num = piv * m(i, j);
                if (!lead.is_zero() && !m(r, j).is_zero()) num = num - lead * m(r, j);
                m(i, j) = num.is_zero() ? num : exact_div(num, prev);
            }
            m(i, c) = Polynomial::zero(ring);
        }
        prev = piv;
        out.pivots.push_back(c);
        ++r;
    }
    out.matrix = std::move(m);
    out.pivot_value = prev;
    return out;
}

/// Rank over the fraction field of the polynomial ring.
inline std::size_t rank(const PolyMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return bareiss_reduce(m, m(0, 0).variables()).pivots.size();
}

/// Kernel over the fraction field, returned with polynomial entries. Each
/// vector has its rational content removed and the leading coefficient of
/// its first nonzero entry made positive.
inline std::vector<PolyVector> bareiss_kernel(const PolyMatrix& m, const std::vector<std::string>& ring) {
    std::vector<PolyVector> basis;
    if (m.cols() == 0) return basis;
    FractionFreeEchelon e = bareiss_reduce(m, ring);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        PolyVector v(m.cols(), Polynomial::zero(ring));
        v[f] = e.pivot_value;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.matrix(r, f);
        // remove a common polynomial factor when some entry divides all others
        const Polynomial* smallest = nullptr;
        for (const auto& p : v)
            if (!p.is_zero() && (!smallest || p.degree() < smallest->degree() ||
                                 (p.degree() == smallest->degree() && p.size() < smallest->size())))
                smallest = &p;
        if (smallest && !smallest->is_constant()) {
            const Polynomial g = *smallest;
            try {
                PolyVector reduced;
                for (const auto& p : v) reduced.push_back(p.is_zero() ? p : exact_div(p, g));
                v = std::move(reduced);
            } catch (const NotDivisible&) {
            }
        }
        // strip rational content across the whole vector
        Integer g(0), l(1);
        for (const auto& p : v)
            for (const auto& [mono, c] : p.terms()) {
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
            }
        Rational s(l, g);
        s.canonicalize();
        for (const auto& p : v)
            if (!p.is_zero()) {
                if (sgn(p.leading().second) < 0) s = -s;
                break;
            }
        for (auto& p : v) p = scale(p, s);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::vector<PolyVector> bareiss_kernel(const PolyMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return bareiss_kernel(m, {});
    return bareiss_kernel(m, m(0, 0).variables());
}

/// Entry-wise specialization of a polynomial matrix at a point.
inline RationalMatrix specialize(const PolyMatrix& m, const std::vector<Rational>& point) {
    RationalMatrix out(m.rows(), m.cols(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = evaluate(m(i, j), point);
    return out;
}

}  // namespace harrison
