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

// Shared fixtures for the test suite: seeded generators and independent
// dense oracles that do not go through the library's linear algebra.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <random>
#include <vector>

#include "harrison/harrison.hpp"

namespace harrison {

// readable gtest failure messages
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const UniPoly& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const Rational& q, std::ostream* os) { *os << q.get_str(); }
template <class T>
void PrintTo(const Matrix<T>& m, std::ostream* os) {
    *os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        *os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j) *os << (j ? ", " : "") << to_string(m(i, j));
    }
    *os << "]";
}

}  // namespace harrison

namespace harrison::testing {

using Rows = std::vector<std::vector<Rational>>;

inline Polynomial parse_in(std::string_view text, std::vector<std::string> vars) {
    return parse_polynomial(text, std::move(vars));
}

/// Plain Gaussian elimination; returns the reduced row echelon form.
inline Rows oracle_rref(Rows m) {
    if (m.empty()) return m;
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    m.resize(r);
    return m;
}

inline std::size_t oracle_rank(const Rows& m) { return oracle_rref(m).size(); }

/// Null space of m (cols unknowns), one vector per free column.
inline Rows oracle_kernel(const Rows& m, std::size_t cols) {
    Rows e = oracle_rref(m);
    std::vector<std::size_t> pivots;
    for (const auto& row : e)
        for (std::size_t c = 0; c < cols; ++c)
            if (row[c] != 0) {
                pivots.push_back(c);
                break;
            }
    Rows out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -e[i][f];
        out.push_back(std::move(v));
    }
    return out;
}

inline Rows rows_of(const RationalMatrix& m) {
    Rows r(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
    return r;
}

/// Symmetrized coefficient a_{idx} read straight off the terms of f.
inline Rational oracle_tensor_entry(const Polynomial& f, const std::vector<std::size_t>& idx) {
    Monomial m(f.nvars(), 0);
    for (auto i : idx) ++m[i];
    Rational c = f.coefficient(m);
    if (c == 0) return c;
    Integer num(1), den(1);
    for (auto e : m)
        for (std::uint32_t k = 2; k <= e; ++k) num *= k;
    for (std::size_t k = 2; k <= idx.size(); ++k) den *= static_cast<unsigned long>(k);
    Rational out = c * Rational(num, den);
    out.canonicalize();
    return out;
}

inline void multisets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                      std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        multisets(n, k, i, cur, out);
        cur.pop_back();
    }
}

/// Center equations built from the multilinear side: for every pair i < j
/// and every filling w of the other d-2 slots,
///   sum_k X(k,i) a(k,j,w) = sum_k X(k,j) a(i,k,w),
/// unknown X(k,l) at k*n + l.
inline Rows oracle_center_system(const Polynomial& f, unsigned d) {
    const std::size_t n = f.nvars();
    std::vector<std::vector<std::size_t>> fills;
    std::vector<std::size_t> cur;
    multisets(n, d - 2, 0, cur, fills);
    Rows rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (const auto& w : fills) {
                std::vector<Rational> row(n * n, Rational(0));
                for (std::size_t k = 0; k < n; ++k) {
                    std::vector<std::size_t> a{k, j}, b{i, k};
                    a.insert(a.end(), w.begin(), w.end());
                    b.insert(b.end(), w.begin(), w.end());
                    row[k * n + i] += oracle_tensor_entry(f, a);
                    row[k * n + j] -= oracle_tensor_entry(f, b);
                }
                rows.push_back(std::move(row));
            }
    return rows;
}

inline std::size_t oracle_center_dim(const Polynomial& f, unsigned d) {
    const std::size_t n = f.nvars();
    return n * n - oracle_rank(oracle_center_system(f, d));
}

inline std::vector<RationalMatrix> oracle_center_basis(const Polynomial& f, unsigned d) {
    const std::size_t n = f.nvars();
    std::vector<RationalMatrix> out;
    for (auto& v : oracle_kernel(oracle_center_system(f, d), n * n)) out.push_back(RationalMatrix::unvectorize(v, n, n));
    return out;
}

/// Same span, compared by the oracle's own RREF.
inline bool oracle_same_span(const std::vector<RationalMatrix>& a, const std::vector<RationalMatrix>& b) {
    Rows ra, rb;
    for (const auto& m : a) ra.push_back(m.vectorize());
    for (const auto& m : b) rb.push_back(m.vectorize());
    return oracle_rref(ra) == oracle_rref(rb);
}

inline Rational random_rational(std::mt19937_64& rng, int lo, int hi, int max_den = 1) {
    std::uniform_int_distribution<int> num(lo, hi), den(1, max_den);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Rational random_nonzero(std::mt19937_64& rng, int lo, int hi, int max_den = 1) {
    for (;;) {
        Rational q = random_rational(rng, lo, hi, max_den);
        if (q != 0) return q;
    }
}

inline Polynomial random_polynomial(std::mt19937_64& rng, const std::vector<std::string>& vars, std::size_t terms,
                                    std::uint32_t max_exp, int max_den = 4) {
    Polynomial p(vars);
    std::uniform_int_distribution<std::uint32_t> e(0, max_exp);
    for (std::size_t t = 0; t < terms; ++t) {
        Monomial m(vars.size());
        for (auto& x : m) x = e(rng);
        p.add_term(m, random_nonzero(rng, -9, 9, max_den));
    }
    return p;
}

inline Polynomial random_homogeneous(std::mt19937_64& rng, const std::vector<std::string>& vars, unsigned d,
                                     std::size_t terms) {
    auto monos = monomials_of_degree(vars.size(), d);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    Polynomial p(vars);
    while (p.is_zero())
        for (std::size_t t = 0; t < terms; ++t) p.add_term(monos[pick(rng)], random_nonzero(rng, -5, 5));
    return p;
}

inline RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t n, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> u(lo, hi);
    for (;;) {
        RationalMatrix m(n, n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = u(rng);
        if (oracle_rank(rows_of(m)) == n) return m;
    }
}

/// sum_i c_i x_i^d over x1..xn
inline Polynomial diagonal_form(const std::vector<Rational>& c, unsigned d) {
    auto xs = numbered_variables(c.size(), "x");
    Polynomial p(xs);
    for (std::size_t i = 0; i < c.size(); ++i) {
        Monomial m(c.size(), 0);
        m[i] = d;
        p.add_term(m, c[i]);
    }
    return p;
}

/// Random nondegenerate form; usually indecomposable.
inline Polynomial random_nondegenerate(std::mt19937_64& rng, std::size_t n, unsigned d) {
    for (;;) {
        auto p = random_homogeneous(rng, numbered_variables(n, "x"), d, n + 3);
        if (is_nondegenerate(Form::from_polynomial(p))) return p;
    }
}

}  // namespace harrison::testing
