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
#include <string>
#include <vector>

#include "algebra.hpp"
#include "center.hpp"
#include "errors.hpp"
#include "form.hpp"
#include "linalg.hpp"

namespace harrison {

/// One summand: variables [first, first + size) of the new coordinates,
/// carrying `form` written in its own variables y1..y_size.
struct Block {
    std::size_t first = 0;
    std::size_t size = 0;
    Form form;
};

/// f(P·y) = sum of the block forms on disjoint variable ranges.
struct Decomposition {
    RationalMatrix P;
    std::vector<Block> blocks;

    std::size_t block_count() const noexcept { return blocks.size(); }
};

namespace decompose_detail {

/// Basis of the column space of e: its columns at the RREF pivot positions.
inline std::vector<RationalVector> column_space(const RationalMatrix& e) {
    std::vector<RationalVector> out;
    for (auto c : rref_with_pivots(e).pivots) out.push_back(e.col(c));
    return out;
}

inline RationalMatrix from_columns(const std::vector<RationalVector>& cols, std::size_t n) {
    RationalMatrix p(n, cols.size(), Rational(0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) p(i, j) = cols[j][i];
    return p;
}

/// Terms of h supported on [first, first + size), re-indexed onto y1..y_size.
inline Polynomial extract_block(const Polynomial& h, std::size_t first, std::size_t size) {
    Polynomial r(numbered_variables(size, "y"));
    for (const auto& [m, c] : h.terms()) {
        bool inside = true;
        for (std::size_t i = 0; i < m.size() && inside; ++i)
            if (m[i] && (i < first || i >= first + size)) inside = false;
        if (!inside) continue;
        r.add_term(Monomial(m.begin() + static_cast<long>(first), m.begin() + static_cast<long>(first + size)), c);
    }
    return r;
}

inline Polynomial place_blocks(const std::vector<Block>& blocks, const std::vector<std::string>& vars) {
    Polynomial sum(vars);
    for (const auto& b : blocks) {
        std::vector<std::size_t> map(b.size);
        for (std::size_t i = 0; i < b.size; ++i) map[i] = b.first + i;
        sum = sum + embed(b.form.poly(), vars, map);
    }
    return sum;
}

}  // namespace decompose_detail

/// Splits a nondegenerate form into indecomposable summands using the
/// primitive idempotents of its center. Blocks are ordered by (size,
/// canonical text of the block form).
inline Decomposition decompose(const Form& f, std::uint64_t seed = 0) {
    require_nondegenerate(f);
    const std::size_t n = f.nvars();
    CenterBasis z = center_basis(f);
    CommAlgebra a = CommAlgebra::from_matrix_span(z.basis);
    IdempotentSet idem = split_idempotents(a, seed);

    std::vector<std::vector<RationalVector>> groups;
    std::vector<RationalVector> all_cols;
    for (const auto& e : idem.idempotents) {
        groups.push_back(decompose_detail::column_space(e));
        all_cols.insert(all_cols.end(), groups.back().begin(), groups.back().end());
    }
    if (all_cols.size() != n) throw ComputationError("idempotent column spaces do not span the variable space");
    RationalMatrix p = decompose_detail::from_columns(all_cols, n);
    Polynomial h = subst_linear(f.poly(), p);

    struct Piece {
        std::vector<RationalVector> cols;
        Polynomial poly;
        std::string key;
    };
    std::vector<Piece> pieces;
    std::size_t offset = 0;
    std::size_t covered = 0;
    for (auto& g : groups) {
        Polynomial b = decompose_detail::extract_block(h, offset, g.size());
        covered += b.size();
        pieces.push_back({std::move(g), b, to_string(b)});
        offset += pieces.back().cols.size();
    }
    if (covered != h.size()) throw ComputationError("cross-block terms survived the change of variables");
    std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) {
        if (x.cols.size() != y.cols.size()) return x.cols.size() < y.cols.size();
        return x.key < y.key;
    });

    Decomposition d;
    all_cols.clear();
    offset = 0;
    for (auto& pc : pieces) {
        all_cols.insert(all_cols.end(), pc.cols.begin(), pc.cols.end());
        d.blocks.push_back(Block{offset, pc.cols.size(), Form::from_polynomial(pc.poly)});
        offset += pc.cols.size();
    }
    d.P = decompose_detail::from_columns(all_cols, n);
    return d;
}

/// True iff f(P·y) equals the blocks placed on disjoint, tiling ranges.
inline bool verify_decomposition(const Form& f, const Decomposition& d) {
    const std::size_t n = f.nvars();
    if (d.P.rows() != n || d.P.cols() != n || !is_invertible(d.P)) return false;
    std::size_t next = 0;
    for (const auto& b : d.blocks) {
        if (b.first != next || b.size == 0 || b.form.nvars() != b.size || b.form.degree() != f.degree()) return false;
        next += b.size;
    }
    if (next != n) return false;
    return subst_linear(f.poly(), d.P) == decompose_detail::place_blocks(d.blocks, f.variables());
}

/// The t = 1 decomposition with P = I.
inline Decomposition trivial_decomposition(const Form& f) {
    Decomposition d;
    d.P = RationalMatrix::identity(f.nvars());
    Polynomial renamed(numbered_variables(f.nvars(), "y"), f.poly().terms());
    d.blocks.push_back(Block{0, f.nvars(), Form::from_polynomial(renamed)});
    return d;
}

inline bool is_diagonalizable(const Form& f, std::uint64_t seed = 0) {
    require_nondegenerate(f);
    CommAlgebra a = CommAlgebra::from_matrix_span(center_basis(f).basis);
    return split_idempotents(a, seed).size() == f.nvars();
}

struct Diagonalization {
    RationalMatrix P;
    /// f(P·y) = sum_i coefficients[i]·y_i^d
    RationalVector coefficients;
};

inline std::optional<Diagonalization> diagonalize(const Form& f, std::uint64_t seed = 0) {
    Decomposition d = decompose(f, seed);
    if (d.block_count() != f.nvars()) return std::nullopt;
    Diagonalization out{d.P, {}};
    for (const auto& b : d.blocks) out.coefficients.push_back(b.form.poly().leading().second);
    return out;
}

/// c·y^d and c2·y^d are related by y -> s·y over the rationals iff c2/c is a
/// rational d-th power.
inline bool equivalent_monomial_blocks(const Rational& c, const Rational& c2, unsigned d) {
    if (sgn(c) == 0 || sgn(c2) == 0) return sgn(c) == sgn(c2);
    Rational ratio = c2 / c;
    return exact_root(ratio, d).has_value();
}

}  // namespace harrison
