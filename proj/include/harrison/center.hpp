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

#include <map>
#include <vector>

#include "errors.hpp"
#include "form.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"

namespace harrison {

/// Basis of Z(f) = { X : H·X = X^T·H } in canonical form: the basis matrices
/// are the nonzero rows of the RREF of their row-major vectorizations.
struct CenterBasis {
    std::size_t n = 0;
    std::vector<RationalMatrix> basis;

    std::size_t dim() const noexcept { return basis.size(); }
};

/// Center over the fraction field of a parameter ring. Entries are
/// polynomials in the parameters only.
struct ParametricCenterBasis {
    std::size_t n = 0;
    std::vector<std::string> parameters;
    std::vector<PolyMatrix> basis;

    std::size_t dim() const noexcept { return basis.size(); }
};

/// Index of unknown X(k,l) in the row-major vectorization.
inline std::size_t unknown_index(std::size_t n, std::size_t k, std::size_t l) { return k * n + l; }

/// Linear system in the n^2 entries of X from the entries (i,j), i < j, of
/// H·X - X^T·H, one row per (pair, monomial of degree d-2). The diagonal
/// entries vanish identically because that matrix is antisymmetric.
inline RationalMatrix center_equations(const Form& f) {
    const std::size_t n = f.nvars();
    const PolyMatrix& h = f.hessian();
    std::vector<RationalVector> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::map<Monomial, RationalVector, GrlexLess> block;
            auto row_for = [&](const Monomial& m) -> RationalVector& {
                return block.try_emplace(m, RationalVector(n * n, Rational(0))).first->second;
            };
            for (std::size_t k = 0; k < n; ++k) {
                for (const auto& [m, c] : h(i, k).terms()) row_for(m)[unknown_index(n, k, j)] += c;
                for (const auto& [m, c] : h(k, j).terms()) row_for(m)[unknown_index(n, k, i)] -= c;
            }
            for (auto& [m, r] : block) rows.push_back(std::move(r));
        }
    RationalMatrix a(rows.size(), n * n, Rational(0));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n * n; ++c) a(r, c) = rows[r][c];
    return a;
}

/// Canonical basis (RREF rows) of the span of square matrices of side n.
inline std::vector<RationalMatrix> canonical_matrix_span(const std::vector<RationalMatrix>& mats, std::size_t n) {
    std::vector<RationalMatrix> out;
    for (auto& v : canonical_span(vectorize_all(mats), n * n)) out.push_back(RationalMatrix::unvectorize(v, n, n));
    return out;
}

inline CenterBasis center_basis(const Form& f) {
    require_nondegenerate(f);
    const std::size_t n = f.nvars();
    CenterBasis z;
    z.n = n;
    auto kernel = kernel_basis(center_equations(f));
    for (auto& v : canonical_span(kernel, n * n)) z.basis.push_back(RationalMatrix::unvectorize(v, n, n));
    return z;
}

inline std::size_t center_dim(const Form& f) { return center_basis(f).dim(); }

inline PolyMatrix to_poly_matrix(const RationalMatrix& x, const std::vector<std::string>& ring) {
    PolyMatrix out(x.rows(), x.cols(), Polynomial::zero(ring));
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = Polynomial::constant(ring, x(i, j));
    return out;
}

/// True iff H·X - X^T·H vanishes as a polynomial matrix.
inline bool is_central(const Form& f, const RationalMatrix& x) {
    if (x.rows() != f.nvars() || x.cols() != f.nvars()) throw DimensionMismatch("is_central: X must be n x n");
    PolyMatrix px = to_poly_matrix(x, f.variables());
    return (f.hessian() * px - transpose(px) * f.hessian()).is_zero();
}

/// True iff both lists span the same subspace of n x n matrices.
inline bool same_span(const std::vector<RationalMatrix>& a, const std::vector<RationalMatrix>& b, std::size_t n) {
    return canonical_matrix_span(a, n) == canonical_matrix_span(b, n);
}

/// Fraction-free system over the parameter ring; rows are grouped by
/// monomials in the main variables.
inline PolyMatrix center_equations(const ParametricForm& f) {
    const std::size_t n = f.nvars();
    const auto& ring = f.poly().variables();
    const auto mask = f.main_mask();
    const PolyMatrix& h = f.hessian();
    std::vector<PolyVector> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::map<Monomial, PolyVector, GrlexLess> block;
            auto row_for = [&](const Monomial& m) -> PolyVector& {
                return block.try_emplace(m, PolyVector(n * n, Polynomial::zero(ring))).first->second;
            };
            for (std::size_t k = 0; k < n; ++k) {
                for (const auto& [m, c] : collect_by(h(i, k), mask)) {
                    auto& e = row_for(m)[unknown_index(n, k, j)];
                    e = e + c;
                }
                for (const auto& [m, c] : collect_by(h(k, j), mask)) {
                    auto& e = row_for(m)[unknown_index(n, k, i)];
                    e = e - c;
                }
            }
            for (auto& [m, r] : block) rows.push_back(std::move(r));
        }
    PolyMatrix a(rows.size(), n * n, Polynomial::zero(ring));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n * n; ++c) a(r, c) = rows[r][c];
    return a;
}

/// Drops variables that do not occur; throws if one of them does occur.
inline Polynomial restrict_to(const Polynomial& p, const std::vector<std::size_t>& keep) {
    std::vector<std::string> names;
    for (auto k : keep) names.push_back(p.variables()[k]);
    Polynomial r(names);
    for (const auto& [m, c] : p.terms()) {
        Monomial t(keep.size());
        std::uint64_t kept = 0;
        for (std::size_t i = 0; i < keep.size(); ++i) {
            t[i] = m[keep[i]];
            kept += t[i];
        }
        if (kept != total_degree(m)) throw ComputationError("restrict_to: dropped variable occurs in polynomial");
        r.add_term(t, c);
    }
    return r;
}

inline ParametricCenterBasis center_over_polycoeffs(const ParametricForm& f) {
    if (!is_nondegenerate(f)) throw DegenerateForm("form is degenerate over the parameter fraction field");
    const std::size_t n = f.nvars();
    ParametricCenterBasis z;
    z.n = n;
    z.parameters = f.parameters();
    std::vector<std::size_t> params;
    for (std::size_t i = 0; i < f.parameter_mask().size(); ++i)
        if (f.parameter_mask()[i]) params.push_back(i);
    auto kernel = bareiss_kernel(center_equations(f), f.poly().variables());
    for (auto& v : kernel) {
        PolyVector entries;
        for (auto& p : v) entries.push_back(restrict_to(p, params));
        z.basis.push_back(PolyMatrix::unvectorize(entries, n, n));
    }
    return z;
}

}  // namespace harrison
