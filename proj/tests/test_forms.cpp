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

Form F(const std::string& s, std::vector<std::string> vars = {"x1", "x2", "x3"}) {
    return Form::from_polynomial(parse_in(s, vars));
}

RationalVector e(std::size_t n, std::size_t i) {
    RationalVector v(n, Rational(0));
    v[i] = 1;
    return v;
}

Rational theta_of(const Form& f, std::vector<RationalVector> args) { return theta(f.tensor(), args); }

}  // namespace

TEST(Form, Validation) {
    auto f = F("x1^3 + x2^3", {"x1", "x2"});
    EXPECT_EQ(f.degree(), 3u);
    EXPECT_EQ(f.nvars(), 2u);
    EXPECT_THROW(F("x1^2 + x2"), ValidationError);
    EXPECT_THROW(F("x1^2"), ValidationError);
    EXPECT_THROW(Form::from_polynomial(Polynomial::zero({"x1"})), ValidationError);
}

TEST(SymmetricTensor, Entries) {
    EXPECT_EQ(F("x1^2*x2").tensor().at({0, 0, 1}), Rational(1, 3));
    EXPECT_EQ(F("x1^2*x2").tensor().at({1, 0, 0}), Rational(1, 3));
    EXPECT_EQ(F("x1^3").tensor().at({0, 0, 0}), 1);
    EXPECT_EQ(F("x1*x2*x3").tensor().at({0, 1, 2}), Rational(1, 6));
    EXPECT_EQ(F("x1*x2*x3").tensor().at({0, 0, 2}), 0);
}

TEST(SymmetricTensor, MatchesDirectComputation) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 2 + t % 3;
        unsigned d = 3 + t % 3;
        auto f = Form::from_polynomial(random_homogeneous(rng, numbered_variables(n), d, 6));
        for (const auto& [idx, a] : f.tensor().entries) {
            std::vector<std::size_t> i(idx.begin(), idx.end());
            EXPECT_EQ(a, oracle_tensor_entry(f.poly(), i));
        }
    }
}

TEST(Theta, Examples) {
    auto f = F("x1^3 + x2^3", {"x1", "x2"});
    RationalVector v{1, 2};
    EXPECT_EQ(theta_of(f, {v, v, v}), 9);
    auto g = F("x1^2*x2", {"x1", "x2"});
    EXPECT_EQ(theta_of(g, {e(2, 0), e(2, 0), e(2, 1)}), Rational(1, 3));
    EXPECT_THROW(theta_of(g, {e(2, 0), e(2, 0)}), DimensionMismatch);
    EXPECT_THROW(theta_of(g, {e(2, 0), e(2, 0), e(3, 1)}), DimensionMismatch);
}

TEST(Theta, SymmetricAndReconstructing) {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 2 + t % 3;
        unsigned d = 3 + t % 3;
        auto f = Form::from_polynomial(random_homogeneous(rng, numbered_variables(n), d, 5));
        std::vector<RationalVector> args;
        for (unsigned k = 0; k < d; ++k) {
            RationalVector v;
            for (std::size_t i = 0; i < n; ++i) v.push_back(random_rational(rng, -4, 4, 3));
            args.push_back(v);
        }
        Rational base = theta(f.tensor(), args);
        auto shuffled = args;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        EXPECT_EQ(theta(f.tensor(), shuffled), base);
        std::vector<RationalVector> same(d, args[0]);
        EXPECT_EQ(theta(f.tensor(), same), evaluate(f.poly(), args[0]));

        // symbolic reconstruction: sum over sorted tuples of a * (d! / alpha!) * x^alpha
        Polynomial r(f.variables());
        for (const auto& [idx, a] : f.tensor().entries) {
            Monomial m(n, 0);
            for (auto i : idx) ++m[i];
            Integer mult(1);
            for (std::size_t k = 2; k <= d; ++k) mult *= static_cast<unsigned long>(k);
            for (auto x : m)
                for (std::uint32_t k = 2; k <= x; ++k) mult /= k;
            r.add_term(m, a * mult);
        }
        EXPECT_EQ(r, f.poly());
    }
}

TEST(Hessian, Examples) {
    auto f = F("x1^3 + x2^3", {"x1", "x2"});
    const auto& h = f.hessian();
    EXPECT_EQ(h(0, 0), parse_in("6*x1", f.variables()));
    EXPECT_EQ(h(1, 1), parse_in("6*x2", f.variables()));
    EXPECT_TRUE(h(0, 1).is_zero());
    auto g = F("x1*x2*x3");
    for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(g.hessian()(i, i).is_zero());
    EXPECT_EQ(g.hessian()(0, 1), parse_in("x3", g.variables()));
    EXPECT_EQ(g.hessian()(0, 2), parse_in("x2", g.variables()));
    EXPECT_EQ(g.hessian()(1, 2), parse_in("x1", g.variables()));
}

TEST(Hessian, SymmetricHomogeneousAndEquivariant) {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 2 + t % 2;
        unsigned d = 3 + t % 2;
        auto f = Form::from_polynomial(random_homogeneous(rng, numbered_variables(n), d, 5));
        const auto& h = f.hessian();
        EXPECT_EQ(h, transpose(h));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!h(i, j).is_zero()) {
                    EXPECT_EQ(homogeneous_degree(h(i, j)).value(), d - 2);
                }

        auto P = random_invertible(rng, n);
        auto g = change_vars(f, P);
        PolyMatrix hp(n, n, Polynomial::zero(f.variables()));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) hp(i, j) = subst_linear(h(i, j), P);
        PolyMatrix Pp(n, n, Polynomial::zero(f.variables()));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) Pp(i, j) = Polynomial::constant(f.variables(), P(i, j));
        EXPECT_EQ(g.hessian(), transpose(Pp) * hp * Pp);
    }
}

TEST(Nondegeneracy, Examples) {
    EXPECT_TRUE(is_nondegenerate(F("x1^3 + x2^3", {"x1", "x2"})));
    EXPECT_FALSE(is_nondegenerate(F("(x1 + x2)^3", {"x1", "x2"})));
    EXPECT_TRUE(is_nondegenerate(F("x1^2*x2", {"x1", "x2"})));
    EXPECT_FALSE(is_nondegenerate(F("x1^3 + x2^3")));  // x3 unused
    EXPECT_THROW(require_nondegenerate(F("x1^3")), DegenerateForm);
}

TEST(ChangeVars, Composition) {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 15; ++t) {
        auto f = Form::from_polynomial(random_nondegenerate(rng, 3, 3));
        auto P = random_invertible(rng, 3);
        auto Q = random_invertible(rng, 3);
        EXPECT_EQ(change_vars(f, RationalMatrix::identity(3)), f);
        EXPECT_EQ(change_vars(change_vars(f, P), Q), change_vars(f, P * Q));
        EXPECT_TRUE(is_nondegenerate(change_vars(f, P)));
    }
    auto f = F("x1^3 + x2^3 + x3^3");
    EXPECT_THROW(change_vars(f, RationalMatrix{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}), SingularMatrix);
    EXPECT_THROW(change_vars(f, RationalMatrix::identity(2)), DimensionMismatch);
}

TEST(DirectSum, Construction) {
    auto x = F("x^3", {"x"});
    auto s = direct_sum({x, x});
    EXPECT_EQ(s.poly(), parse_in("x1^3 + x2^3", {"x1", "x2"}));
    auto single = direct_sum({F("x1^3 + x1^2*x2", {"x1", "x2"})});
    EXPECT_EQ(single.poly(), parse_in("x1^3 + x1^2*x2", {"x1", "x2"}));
    auto three = direct_sum({F("x1^3 + x1^2*x2", {"x1", "x2"}), F("y^3", {"y"})});
    EXPECT_EQ(three.poly(), parse_in("x1^3 + x1^2*x2 + x3^3", {"x1", "x2", "x3"}));
    EXPECT_THROW(direct_sum({x, F("y^4", {"y"})}), ValidationError);
    EXPECT_THROW(direct_sum({}), ValidationError);
}

TEST(DirectSum, NondegeneracyIsConjunctive) {
    std::mt19937_64 rng(59);
    std::vector<Form> pool{F("x1^3 + x2^3", {"x1", "x2"}), F("(x1 + x2)^3", {"x1", "x2"}), F("x1^2*x2", {"x1", "x2"}),
                           F("x1^3", {"x1"}), F("x1^2*x3 + x2^3")};
    for (int t = 0; t < 5; ++t) pool.push_back(Form::from_polynomial(random_homogeneous(rng, numbered_variables(2), 3, 2)));
    for (const auto& a : pool)
        for (const auto& b : pool)
            EXPECT_EQ(is_nondegenerate(direct_sum({a, b})), is_nondegenerate(a) && is_nondegenerate(b));
}

TEST(ParametricForm, Construction) {
    auto p = parse_in("(x1^3 + x2^3)*(y1^3 + y2^3)", {"x1", "x2", "y1", "y2"});
    auto f = ParametricForm::make(p, {"x1", "x2"});
    EXPECT_EQ(f.degree(), 3u);
    EXPECT_EQ(f.nvars(), 2u);
    EXPECT_TRUE(is_nondegenerate(f));
    EXPECT_THROW(ParametricForm::make(p, {"z"}), ValidationError);
    auto q = parse_in("x1*y1^3 + y2^2", {"x1", "y1", "y2"});
    EXPECT_THROW(ParametricForm::make(q, {"x1"}), ValidationError);
    auto deg = parse_in("x1*(y1 + y2)^3", {"x1", "y1", "y2"});
    EXPECT_FALSE(is_nondegenerate(ParametricForm::make(deg, {"x1"})));
}
