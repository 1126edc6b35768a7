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
#include <initializer_list>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace harrison {

/// Ring helpers so matrix code is generic over Rational and Polynomial.
/// Polynomial overloads live next to Polynomial.
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

namespace detail {
/// Unqualified call so Polynomial's overload is found by ADL.
template <class T>
bool entry_is_zero(const T& x) {
    return is_zero(x);
}
}  // namespace detail

/// Dense row-major matrix over an exact coefficient domain.
template <class T>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols) : Matrix(rows, cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n, const T& zero, const T& one) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }
    static Matrix identity(std::size_t n) { return identity(n, T(0), T(1)); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<T>& data() const noexcept { return data_; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!detail::entry_is_zero(x)) return false;
        return true;
    }

    /// Row-major flattening (X11, X12, ...).
    std::vector<T> vectorize() const { return data_; }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        Matrix m;
        m.rows_ = rows.size();
        m.cols_ = rows.empty() ? 0 : rows.front().size();
        for (const auto& r : rows) {
            if (r.size() != m.cols_) throw DimensionMismatch("ragged row list");
            m.data_.insert(m.data_.end(), r.begin(), r.end());
        }
        return m;
    }
    static Matrix unvectorize(const std::vector<T>& v, std::size_t rows, std::size_t cols) {
        if (v.size() != rows * cols) throw DimensionMismatch("vector length does not match matrix shape");
        Matrix m;
        m.rows_ = rows;
        m.cols_ = cols;
        m.data_ = v;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
    if (m.rows() == 0 || m.cols() == 0) return Matrix<T>(m.cols(), m.rows(), T());
    Matrix<T> t(m.cols(), m.rows(), m(0, 0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

template <class T>
Matrix<T> mat_add(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("mat_add: shape mismatch");
    Matrix<T> c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

template <class T>
Matrix<T> mat_sub(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("mat_sub: shape mismatch");
    Matrix<T> c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("mat_mul: inner dimensions differ");
    if (a.rows() == 0 || b.cols() == 0) return Matrix<T>(a.rows(), b.cols(), T());
    if (a.cols() == 0) return Matrix<T>(a.rows(), b.cols(), T());
    Matrix<T> c(a.rows(), b.cols(), zero_like(a(0, 0)));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = c(i, j) + a(i, k) * b(k, j);
        }
    return c;
}

template <class T>
Matrix<T> mat_scale(const Matrix<T>& a, const T& s) {
    Matrix<T> c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) * s;
    return c;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) { return mat_mul(a, b); }
template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) { return mat_add(a, b); }
template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) { return mat_sub(a, b); }

template <class T>
std::vector<T> mat_vec(const Matrix<T>& a, const std::vector<T>& v) {
    if (a.cols() != v.size()) throw DimensionMismatch("mat_vec: length mismatch");
    std::vector<T> out;
    out.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (a.cols() == 0) {
            out.push_back(T());
            continue;
        }
        T acc = zero_like(a(i, 0));
        for (std::size_t j = 0; j < a.cols(); ++j) acc = acc + a(i, j) * v[j];
        out.push_back(acc);
    }
    return out;
}

using RationalMatrix = Matrix<Rational>;
using RationalVector = std::vector<Rational>;

}  // namespace harrison
