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
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"

namespace harrison {

/// Symmetric coefficients a_{i1...id} of a form, stored once per sorted
/// (0-based) index tuple.
struct SymmetricTensor {
    std::size_t order = 0;
    std::size_t dim = 0;
    std::map<std::vector<std::uint32_t>, Rational> entries;

    Rational at(std::vector<std::uint32_t> index) const {
        std::sort(index.begin(), index.end());
        auto it = entries.find(index);
        return it == entries.end() ? Rational(0) : it->second;
    }
};

namespace detail {
inline Integer factorial(std::uint64_t k) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

inline PolyMatrix hessian_in(const Polynomial& p, const std::vector<std::size_t>& vars) {
    const std::size_t n = vars.size();
    PolyMatrix h(n, n, Polynomial::zero(p.variables()));
    std::vector<Polynomial> first;
    first.reserve(n);
    for (auto v : vars) first.push_back(diff(p, v));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            h(i, j) = diff(first[i], vars[j]);
            h(j, i) = h(i, j);
        }
    return h;
}
}  // namespace detail

/// A homogeneous polynomial of degree d >= 3 in n >= 1 variables. The
/// Hessian and symmetric tensor are computed at construction.
class Form {
   public:
    /// Validates p: nonzero, homogeneous, degree at least 3.
    static Form from_polynomial(const Polynomial& p) {
        auto h = homogeneous_degree(p);
        if (h.kind == HomogeneousDegree::Kind::zero) throw ValidationError("the zero polynomial is not a form");
        if (h.kind == HomogeneousDegree::Kind::inhomogeneous) throw ValidationError("polynomial is not homogeneous");
        if (h.degree < 3) throw ValidationError("form degree must be at least 3, got " + std::to_string(h.degree));
        return Form(p, static_cast<unsigned>(h.degree));
    }

    const Polynomial& poly() const noexcept { return poly_; }
    unsigned degree() const noexcept { return degree_; }
    std::size_t nvars() const noexcept { return poly_.nvars(); }
    const std::vector<std::string>& variables() const noexcept { return poly_.variables(); }
    const PolyMatrix& hessian() const noexcept { return hessian_; }
    const SymmetricTensor& tensor() const noexcept { return tensor_; }

    friend bool operator==(const Form& a, const Form& b) { return a.poly_ == b.poly_; }

   private:
    Form(Polynomial p, unsigned d) : poly_(std::move(p)), degree_(d) {
        std::vector<std::size_t> all(poly_.nvars());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        hessian_ = detail::hessian_in(poly_, all);
        tensor_.order = degree_;
        tensor_.dim = poly_.nvars();
        const Integer dfact = detail::factorial(degree_);
        for (const auto& [m, c] : poly_.terms()) {
            std::vector<std::uint32_t> idx;
            Integer mult(1);
            for (std::size_t i = 0; i < m.size(); ++i) {
                idx.insert(idx.end(), m[i], static_cast<std::uint32_t>(i));
                mult *= detail::factorial(m[i]);
            }
            Rational a = c * Rational(mult, dfact);
            a.canonicalize();
            tensor_.entries.emplace(std::move(idx), a);
        }
    }

    Polynomial poly_;
    unsigned degree_ = 0;
    PolyMatrix hessian_;
    SymmetricTensor tensor_;
};

inline Form form_from_poly(const Polynomial& p) { return Form::from_polynomial(p); }

inline const SymmetricTensor& symmetric_tensor(const Form& f) { return f.tensor(); }
inline const PolyMatrix& hessian(const Form& f) { return f.hessian(); }

/// Full multilinear expansion sum a_{i1..id} v1_{i1} ... vd_{id}.
inline Rational theta(const SymmetricTensor& t, std::span<const RationalVector> args) {
    if (args.size() != t.order) throw DimensionMismatch("theta: expected one argument per tensor slot");
    for (const auto& v : args)
        if (v.size() != t.dim) throw DimensionMismatch("theta: argument length differs from dimension");
    Rational acc(0);
    for (const auto& [index, a] : t.entries) {
        std::vector<std::uint32_t> perm = index;
        do {
            Rational prod = a;
            for (std::size_t k = 0; k < perm.size() && sgn(prod) != 0; ++k) prod *= args[k][perm[k]];
            acc += prod;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return acc;
}

/// Coefficient matrix of the given polynomials over a fixed monomial basis.
inline RationalMatrix coefficient_matrix(const std::vector<Polynomial>& polys) {
    std::map<Monomial, std::size_t, GrlexLess> columns;
    for (const auto& p : polys)
        for (const auto& [m, c] : p.terms()) columns.emplace(m, 0);
    std::size_t k = 0;
    for (auto& [m, idx] : columns) idx = k++;
    RationalMatrix a(polys.size(), columns.size(), Rational(0));
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (const auto& [m, c] : polys[i].terms()) a(i, columns[m]) = c;
    return a;
}

/// True iff the n first partial derivatives are linearly independent.
inline bool is_nondegenerate(const Form& f) {
    std::vector<Polynomial> partials;
    for (std::size_t i = 0; i < f.nvars(); ++i) partials.push_back(diff(f.poly(), i));
    return rank(coefficient_matrix(partials)) == f.nvars();
}

inline void require_nondegenerate(const Form& f) {
    if (!is_nondegenerate(f)) throw DegenerateForm("form is degenerate: its first partials are linearly dependent");
}

/// g(y) = f(P·y) for an invertible P.
inline Form change_vars(const Form& f, const RationalMatrix& P) {
    if (P.rows() != f.nvars() || P.cols() != f.nvars())
        throw DimensionMismatch("change_vars: matrix side must equal the variable count");
    if (!is_invertible(P)) throw SingularMatrix();
    return Form::from_polynomial(subst_linear(f.poly(), P));
}

/// Places each part on its own block of variables x1..xN.
inline Form direct_sum(const std::vector<Form>& parts) {
    if (parts.empty()) throw ValidationError("direct_sum needs at least one part");
    const unsigned d = parts.front().degree();
    std::size_t total = 0;
    for (const auto& p : parts) {
        if (p.degree() != d) throw ValidationError("direct_sum: parts have different degrees");
        total += p.nvars();
    }
    auto vars = numbered_variables(total);
    Polynomial sum(vars);
    std::size_t offset = 0;
    for (const auto& p : parts) {
        std::vector<std::size_t> map(p.nvars());
        for (std::size_t i = 0; i < map.size(); ++i) map[i] = offset + i;
        sum = sum + embed(p.poly(), vars, map);
        offset += p.nvars();
    }
    return Form::from_polynomial(sum);
}

/// A form in the "main" variables whose coefficients are polynomials in a
/// set of parameter variables; the base field is the fraction field of the
/// parameter ring. Coefficients must already be denominator-free.
class ParametricForm {
   public:
    static ParametricForm make(const Polynomial& p, const std::vector<std::string>& parameters) {
        ParametricForm f;
        f.poly_ = p;
        f.is_param_.assign(p.nvars(), false);
        for (const auto& name : parameters) {
            auto it = std::find(p.variables().begin(), p.variables().end(), name);
            if (it == p.variables().end()) throw ValidationError("parameter '" + name + "' is not a variable of the form");
            f.is_param_[static_cast<std::size_t>(it - p.variables().begin())] = true;
        }
        std::vector<bool> main_mask(p.nvars());
        for (std::size_t i = 0; i < p.nvars(); ++i) {
            main_mask[i] = !f.is_param_[i];
            if (main_mask[i]) f.main_.push_back(i);
        }
        if (f.main_.empty()) throw ValidationError("form has no non-parameter variables");
        auto h = homogeneous_degree_in(p, main_mask);
        if (h.kind == HomogeneousDegree::Kind::zero) throw ValidationError("the zero polynomial is not a form");
        if (h.kind == HomogeneousDegree::Kind::inhomogeneous)
            throw ValidationError("polynomial is not homogeneous in the non-parameter variables");
        if (h.degree < 3) throw ValidationError("form degree must be at least 3, got " + std::to_string(h.degree));
        f.degree_ = static_cast<unsigned>(h.degree);
        f.hessian_ = detail::hessian_in(p, f.main_);
        return f;
    }

    const Polynomial& poly() const noexcept { return poly_; }
    unsigned degree() const noexcept { return degree_; }
    std::size_t nvars() const noexcept { return main_.size(); }
    const std::vector<std::size_t>& main_variables() const noexcept { return main_; }
    const std::vector<bool>& parameter_mask() const noexcept { return is_param_; }
    std::vector<bool> main_mask() const {
        std::vector<bool> m(is_param_.size());
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = !is_param_[i];
        return m;
    }
    std::vector<std::string> parameters() const {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < is_param_.size(); ++i)
            if (is_param_[i]) out.push_back(poly_.variables()[i]);
        return out;
    }
    /// Hessian in the main variables; entries live in the joint ring.
    const PolyMatrix& hessian() const noexcept { return hessian_; }

   private:
    ParametricForm() = default;
    Polynomial poly_;
    unsigned degree_ = 0;
    std::vector<bool> is_param_;
    std::vector<std::size_t> main_;
    PolyMatrix hessian_;
};

/// Nondegeneracy over the fraction field of the parameter ring.
inline bool is_nondegenerate(const ParametricForm& f) {
    const auto mask = f.main_mask();
    std::vector<std::map<Monomial, Polynomial, GrlexLess>> rows;
    std::map<Monomial, std::size_t, GrlexLess> columns;
    for (auto v : f.main_variables()) {
        rows.push_back(collect_by(diff(f.poly(), v), mask));
        for (const auto& [m, c] : rows.back()) columns.emplace(m, 0);
    }
    std::size_t k = 0;
    for (auto& [m, idx] : columns) idx = k++;
    PolyMatrix a(rows.size(), columns.size(), Polynomial::zero(f.poly().variables()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [m, c] : rows[i]) a(i, columns[m]) = c;
    return rank(a) == f.nvars();
}

}  // namespace harrison
