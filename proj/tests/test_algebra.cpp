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

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace harrison;
using namespace harrison::testing;

namespace {

RationalMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
    RationalMatrix m(n, n, Rational(0));
    m(i, j) = 1;
    return m;
}

// companion matrix of a monic polynomial, given low to high without the leading 1
RationalMatrix companion(const std::vector<Rational>& c) {
    const std::size_t n = c.size();
    RationalMatrix m(n, n, Rational(0));
    for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -c[i];
    return m;
}

// Q[t]/(p) as the span of powers of the companion matrix
CommAlgebra quotient_algebra(const std::vector<Rational>& c) {
    auto C = companion(c);
    std::vector<RationalMatrix> powers{RationalMatrix::identity(c.size())};
    for (std::size_t k = 1; k < c.size(); ++k) powers.push_back(powers.back() * C);
    return from_matrix_span(powers);
}

CommAlgebra nilpotent_fixture() {
    return from_matrix_span({RationalMatrix::identity(2), RationalMatrix{{0, 1}, {0, 0}}});
}

UniPoly T(std::initializer_list<int> low_to_high) {
    std::vector<Rational> c;
    for (int x : low_to_high) c.emplace_back(x);
    return UniPoly(std::move(c));
}

bool nilpotent(const RationalMatrix& m) {
    RationalMatrix p = m;
    for (std::size_t k = 0; k < m.rows(); ++k) {
        if (p.is_zero()) return true;
        p = p * m;
    }
    return p.is_zero();
}

void expect_complete_primitive(const CommAlgebra& a, const IdempotentSet& s) {
    EXPECT_TRUE(satisfies_idempotent_axioms(s, a.unit_matrix()));
    std::size_t total = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto c = algebra_detail::corner(a, s.idempotents[i]);
        EXPECT_EQ(c.dim(), s.corner_dims[i]);
        EXPECT_TRUE(is_local(c));
        total += c.dim();
    }
    EXPECT_EQ(total, a.dim());
}

}  // namespace

TEST(CommAlgebra, Construction) {
    auto one = from_matrix_span({RationalMatrix::identity(2)});
    EXPECT_EQ(one.dim(), 1u);

    auto diag = from_matrix_span({unit(2, 0, 0), unit(2, 1, 1)});
    ASSERT_EQ(diag.dim(), 2u);
    EXPECT_EQ(diag.unit_matrix(), RationalMatrix::identity(2));
    // E11 in coordinates over {I, b1}
    auto e11 = diag.coordinates(unit(2, 0, 0));
    EXPECT_EQ(diag.mul(e11, e11), e11);

    auto nil = nilpotent_fixture();
    ASSERT_EQ(nil.dim(), 2u);
    auto n = nil.basis_element(1);
    EXPECT_EQ(nil.mul(n, n), nil.zero());
    EXPECT_EQ(nil.structure(1, 1), (RationalVector{0, 0}));
}

TEST(CommAlgebra, ErrorsAreDistinct) {
    EXPECT_THROW(from_matrix_span({unit(2, 0, 1)}), MissingIdentity);
    EXPECT_THROW(from_matrix_span({}), MissingIdentity);
    EXPECT_THROW(from_matrix_span({RationalMatrix::identity(2), unit(2, 0, 1), unit(2, 1, 0)}), NotCommutative);
    // commutative but not closed: I, A with A^2 outside the span
    RationalMatrix a{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
    EXPECT_THROW(from_matrix_span({RationalMatrix::identity(3), a}), NotClosed);
    EXPECT_THROW(from_matrix_span({RationalMatrix::identity(2), RationalMatrix::identity(3)}), DimensionMismatch);
}

TEST(CommAlgebra, StructureConstantsAreCommutativeAndAssociative) {
    auto a = quotient_algebra({Rational(2), Rational(-1), Rational(0), Rational(1)});
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            EXPECT_EQ(a.structure(i, j), a.structure(j, i));
            auto x = a.basis_element(i), y = a.basis_element(j);
            EXPECT_EQ(a.to_matrix(a.mul(x, y)), a.basis()[i] * a.basis()[j]);
            for (std::size_t k = 0; k < a.dim(); ++k) {
                auto z = a.basis_element(k);
                EXPECT_EQ(a.mul(a.mul(x, y), z), a.mul(x, a.mul(y, z)));
            }
        }
}

TEST(MinPoly, Examples) {
    auto diag = from_matrix_span({unit(2, 0, 0), unit(2, 1, 1)});
    EXPECT_EQ(min_poly(diag, diag.one()), T({-1, 1}));
    EXPECT_EQ(min_poly(diag, diag.coordinates(unit(2, 0, 0))), T({0, -1, 1}));
    auto nil = nilpotent_fixture();
    EXPECT_EQ(min_poly(nil, nil.basis_element(1)), T({0, 0, 1}));
    auto a = quotient_algebra({Rational(1), Rational(0), Rational(1)});  // t^3 + t^2 + 1
    auto t = a.coordinates(companion({Rational(1), Rational(0), Rational(1)}));
    EXPECT_EQ(min_poly(a, t), T({1, 0, 1, 1}));
    EXPECT_EQ(a.evaluate(min_poly(a, t), t), a.zero());
}

TEST(Radical, Examples) {
    auto diag = from_matrix_span({unit(3, 0, 0), unit(3, 1, 1), unit(3, 2, 2)});
    EXPECT_TRUE(radical(diag).empty());
    auto nil = nilpotent_fixture();
    auto r = radical(nil);
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(nil.to_matrix(r[0]), (RationalMatrix{{0, 1}, {0, 0}}));
}

TEST(Radical, ElementsAreNilpotent) {
    // Q[t]/((t^2-2)(t-1)^3): radical dimension 2
    UniPoly p = T({-2, 0, 1}) * upow(T({-1, 1}), 3);
    std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end() - 1);
    auto a = quotient_algebra(c);
    auto r = radical(a);
    EXPECT_EQ(r.size(), 2u);
    for (const auto& x : r) {
        EXPECT_TRUE(nilpotent(a.to_matrix(x)));
        auto m = min_poly(a, x);
        EXPECT_EQ(m, UniPoly::power(static_cast<std::size_t>(m.degree())));
        EXPECT_LE(m.degree(), static_cast<long>(a.dim()));
    }
}

TEST(Idempotents, Fixtures) {
    auto diag = from_matrix_span({unit(2, 0, 0), unit(2, 1, 1)});
    auto s = split_idempotents(diag);
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s.idempotents[0], unit(2, 1, 1));
    EXPECT_EQ(s.idempotents[1], unit(2, 0, 0));
    expect_complete_primitive(diag, s);
    EXPECT_FALSE(is_local(diag));

    auto nil = nilpotent_fixture();
    auto sn = split_idempotents(nil);
    ASSERT_EQ(sn.size(), 1u);
    EXPECT_EQ(sn.idempotents[0], RationalMatrix::identity(2));
    EXPECT_TRUE(is_local(nil));

    auto rot = from_matrix_span({RationalMatrix::identity(2), RationalMatrix{{0, -1}, {1, 0}}});
    EXPECT_EQ(split_idempotents(rot).size(), 1u);
    EXPECT_TRUE(is_local(rot));

    EXPECT_TRUE(is_local(from_matrix_span({RationalMatrix::identity(3)})));
}

TEST(Idempotents, QuotientRings) {
    struct Case {
        std::vector<Rational> coeffs;
        std::size_t count;
        std::vector<std::size_t> corner_dims;
    };
    auto from = [](const UniPoly& p) { return std::vector<Rational>(p.coeffs().begin(), p.coeffs().end() - 1); };
    std::vector<Case> cases{
        {from(T({0, -1, 1})), 2, {1, 1}},                                    // t^2 - t
        {from(T({0, -1, 0, 1})), 3, {1, 1, 1}},                              // t^3 - t
        {from(T({1, 0, 1}) * T({-2, 0, 0, 1})), 2, {2, 3}},                  // (t^2+1)(t^3-2)
        {from(upow(T({-2, 0, 1}), 2) * T({-1, 1})), 2, {1, 4}},              // (t^2-2)^2 (t-1)
        {from(upow(T({1, 1}), 3) * upow(T({-1, 1}), 2) * T({0, 1})), 3, {1, 2, 3}},
        {from(T({1, 0, -10, 0, 1})), 1, {4}},                                // irreducible quartic
    };
    for (const auto& c : cases) {
        auto a = quotient_algebra(c.coeffs);
        auto s0 = split_idempotents(a, 0);
        EXPECT_EQ(s0.size(), c.count);
        EXPECT_EQ(s0.corner_dims, c.corner_dims);
        expect_complete_primitive(a, s0);
        for (std::uint64_t seed : {1u, 42u, 7u, 1234u}) EXPECT_EQ(split_idempotents(a, seed).idempotents, s0.idempotents);
    }
}

TEST(Idempotents, SeedIndependenceOnCenters) {
    std::mt19937_64 rng(97);
    for (int t = 0; t < 8; ++t) {
        std::size_t n = 2 + t % 3;
        std::vector<Rational> c;
        for (std::size_t i = 0; i < n; ++i) c.emplace_back(static_cast<long>(i + 1));
        auto P = random_invertible(rng, n);
        auto f = change_vars(Form::from_polynomial(diagonal_form(c, 3)), P);
        auto a = from_matrix_span(center_basis(f).basis);
        auto s0 = split_idempotents(a, 0);
        EXPECT_EQ(s0.size(), n);
        expect_complete_primitive(a, s0);
        EXPECT_EQ(split_idempotents(a, 1).idempotents, s0.idempotents);
        EXPECT_EQ(split_idempotents(a, 42).idempotents, s0.idempotents);
    }
}

TEST(Idempotents, LiftingConvergesThroughRadical) {
    // Q[t]/(t^2 (t-1)^2): the class of t^2 is not idempotent but lifts
    auto a = quotient_algebra({Rational(0), Rational(0), Rational(1), Rational(-2)});
    auto s = split_idempotents(a);
    EXPECT_EQ(s.size(), 2u);
    EXPECT_EQ(s.corner_dims, (std::vector<std::size_t>{2, 2}));
    expect_complete_primitive(a, s);
}
